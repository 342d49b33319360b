// Copyright 2026 The coalradio Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coalradio/coalition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coalradio/errors.hpp"
#include "coalradio/simplex.hpp"

namespace coalradio {
namespace {

// A relay whose remaining need falls below this has decoded for free and can
// no longer be given a positive slot.
constexpr double kDecodedEps = 1e-12;

NodeId su_node(int s) { return NodeId::secondary(s); }

// Greedy chain on the normalized problem where every receiver must collect
// one unit of information. Returns the selected relays in order.
std::vector<int> greedy_chain(const CapacityTable& table, int pu,
                              std::vector<int> remaining) {
  const NodeId pu_node = NodeId::primary(pu);
  std::vector<double> info(remaining.size(), 0.0);
  double pu_info = 0.0;
  NodeId tx = NodeId::base_station();
  std::vector<int> chain;

  while (!remaining.empty()) {
    std::size_t best = remaining.size();
    double best_time = 0.0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const double need = 1.0 - info[i];
      if (need <= kDecodedEps) continue;
      const double t = need / table.at(tx, su_node(remaining[i]));
      // remaining is sorted, so strict comparison keeps the lowest index.
      if (best == remaining.size() || t < best_time) {
        best = i;
        best_time = t;
      }
    }
    if (best == remaining.size()) break;
    const double pu_time = (1.0 - pu_info) / table.at(tx, pu_node);
    if (!(best_time < pu_time)) break;

    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (i == best) continue;
      info[i] += best_time * table.at(tx, su_node(remaining[i]));
    }
    pu_info += best_time * table.at(tx, pu_node);
    tx = su_node(remaining[best]);
    chain.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    info.erase(info.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return chain;
}

}  // namespace

OrderedCapacityMatrix::OrderedCapacityMatrix(std::size_t size)
    : size_(size), data_(size * size, 0.0) {}

OrderedCapacityMatrix OrderedCapacityMatrix::from_upper_rows(
    const std::vector<std::vector<double>>& rows) {
  OrderedCapacityMatrix m(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != rows.size() - a) {
      throw DimensionMismatch("row " + std::to_string(a) + " must hold " +
                              std::to_string(rows.size() - a) + " entries");
    }
    for (std::size_t k = 0; k < rows[a].size(); ++k) m.set(a, a + k, rows[a][k]);
  }
  return m;
}

double OrderedCapacityMatrix::operator()(std::size_t row, std::size_t col) const {
  return data_[row * size_ + col];
}

void OrderedCapacityMatrix::set(std::size_t row, std::size_t col, double value) {
  if (row >= size_ || col >= size_ || row > col) {
    throw DimensionMismatch("entry (" + std::to_string(row) + ", " +
                            std::to_string(col) +
                            ") outside the upper triangle");
  }
  data_[row * size_ + col] = value;
}

bool Coalition::contains(int su) const {
  return std::find(order.begin(), order.end(), su) != order.end() ||
         std::find(unused.begin(), unused.end(), su) != unused.end();
}

std::vector<int> Coalition::members() const {
  std::vector<int> all(order);
  all.insert(all.end(), unused.begin(), unused.end());
  std::sort(all.begin(), all.end());
  return all;
}

OrderedCapacityMatrix build_matrix(const CapacityTable& table, int pu,
                                   std::span<const int> order) {
  const NodeId pu_node = NodeId::primary(pu);
  if (!table.valid_node(pu_node)) {
    throw InvalidParams("unknown primary user P" + std::to_string(pu));
  }
  std::vector<int> seen(order.begin(), order.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidParams("relay order repeats a secondary user");
  }

  const std::size_t c = order.size();
  OrderedCapacityMatrix m(c + 1);
  for (std::size_t row = 0; row <= c; ++row) {
    const NodeId tx = row == 0 ? NodeId::base_station() : su_node(order[row - 1]);
    for (std::size_t col = row; col <= c; ++col) {
      const NodeId rx = col == c ? pu_node : su_node(order[col]);
      m.set(row, col, table.at(tx, rx));
    }
  }
  return m;
}

std::vector<double> rates(const OrderedCapacityMatrix& matrix,
                          std::span<const double> times) {
  if (times.size() != matrix.size()) {
    throw DimensionMismatch("time vector has " + std::to_string(times.size()) +
                            " entries, matrix has size " +
                            std::to_string(matrix.size()));
  }
  std::vector<double> out(matrix.size(), 0.0);
  for (std::size_t k = 0; k < matrix.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) out[k] += times[j] * matrix(j, k);
  }
  return out;
}

double coalition_rate(const OrderedCapacityMatrix& matrix,
                      std::span<const double> times) {
  const auto r = rates(matrix, times);
  if (r.empty()) throw DimensionMismatch("empty capacity matrix");
  return *std::min_element(r.begin(), r.end());
}

TimeSolution full_support_times(const OrderedCapacityMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw DimensionMismatch("empty capacity matrix");
  TimeSolution sol;
  sol.times.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (matrix(k, k) == 0.0) {
      throw SingularMatrix("zero diagonal entry at slot " + std::to_string(k));
    }
    double received = 0.0;
    for (std::size_t j = 0; j < k; ++j) received += sol.times[j] * matrix(j, k);
    sol.times[k] = (1.0 - received) / matrix(k, k);
  }
  const double total = std::accumulate(sol.times.begin(), sol.times.end(), 0.0);
  for (double& t : sol.times) t /= total;
  sol.rate = 1.0 / total;
  return sol;
}

bool full_support_is_optimal(const OrderedCapacityMatrix& matrix) {
  const TimeSolution eq = full_support_times(matrix);
  for (double t : eq.times) {
    if (!(t > 0.0)) return false;
  }
  // Dual of the time LP: L y = 1, y >= 0.
  const std::size_t n = matrix.size();
  std::vector<double> y(n, 0.0);
  double scale = 0.0;
  for (std::size_t j = n; j-- > 0;) {
    double used = 0.0;
    for (std::size_t k = j + 1; k < n; ++k) used += matrix(j, k) * y[k];
    y[j] = (1.0 - used) / matrix(j, j);
    scale += std::abs(y[j]);
  }
  for (double v : y) {
    if (v < -1e-12 * scale) return false;
  }
  return true;
}

TimeSolution solve_times_lp(const OrderedCapacityMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw DimensionMismatch("empty capacity matrix");
  // Dual packing form: max 1'y s.t. L y <= 1, y >= 0. Its optimum is 1/R and
  // the row prices are t / R.
  PackingLp lp;
  lp.a.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    if (!(matrix(j, j) > 0.0)) {
      throw SingularMatrix("non-positive diagonal entry at slot " +
                           std::to_string(j));
    }
    for (std::size_t k = j; k < n; ++k) lp.a[j][k] = matrix(j, k);
  }
  lp.b.assign(n, 1.0);
  lp.c.assign(n, 1.0);
  const int c = static_cast<int>(n) - 1;
  const PackingLpSolution dual = solve_packing_lp(lp, 10 * (c + 2) * (c + 2));

  TimeSolution sol;
  sol.times = dual.prices;
  double total = 0.0;
  for (double& t : sol.times) {
    t = std::max(t, 0.0);
    total += t;
  }
  if (!(total > 0.0) || !(dual.objective > 0.0)) {
    throw NumericalFailure("time LP produced a degenerate solution");
  }
  for (double& t : sol.times) t /= total;
  sol.rate = 1.0 / dual.objective;
  return sol;
}

Coalition order_relays(const CapacityTable& table, int pu,
                       std::span<const int> members, double demand) {
  if (!table.valid_node(NodeId::primary(pu))) {
    throw InvalidParams("unknown primary user P" + std::to_string(pu));
  }
  std::vector<int> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidParams("member set repeats a secondary user");
  }
  for (int s : sorted) {
    if (!table.valid_node(su_node(s))) {
      throw InvalidParams("unknown secondary user S" + std::to_string(s));
    }
  }

  Coalition out;
  out.pu = pu;
  out.demand = demand;
  out.order = greedy_chain(table, pu, sorted);
  const TimeSolution eq = full_support_times(build_matrix(table, pu, out.order));
  out.times = eq.times;
  out.rate = eq.rate;
  for (int s : out.order) {
    out.base_links.push_back(table.at(NodeId::base_station(), su_node(s)));
  }
  for (int s : sorted) {
    if (std::find(out.order.begin(), out.order.end(), s) == out.order.end()) {
      out.unused.push_back(s);
    }
  }
  out.alpha = std::min(1.0, demand / out.rate);
  return out;
}

double member_utility(const Coalition& coalition, int su) {
  for (std::size_t k = 0; k < coalition.order.size(); ++k) {
    if (coalition.order[k] == su) {
      return (1.0 - coalition.alpha) * coalition.times[k + 1] *
             coalition.base_links[k];
    }
  }
  if (std::find(coalition.unused.begin(), coalition.unused.end(), su) !=
      coalition.unused.end()) {
    return 0.0;
  }
  throw NotMember("S" + std::to_string(su) + " is not in the coalition of P" +
                  std::to_string(coalition.pu));
}

double coalition_value(const Coalition& coalition) {
  double value = 0.0;
  for (std::size_t k = 0; k < coalition.order.size(); ++k) {
    value += member_utility(coalition, coalition.order[k]);
  }
  return value;
}

}  // namespace coalradio
