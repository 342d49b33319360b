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

#include "coalradio/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "coalradio/errors.hpp"
#include "coalradio/rng.hpp"
#include "coalradio/scenario_io.hpp"

namespace coalradio {
namespace {

void check_permutation_budget(std::size_t n, const OracleBudget& budget) {
  if (static_cast<long long>(n) > budget.max_permutation_size) {
    throw BudgetExceeded("member set of size " + std::to_string(n) +
                         " exceeds the permutation budget of " +
                         std::to_string(budget.max_permutation_size));
  }
}

std::vector<int> sorted_members(std::span<const int> members) {
  std::vector<int> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BruteForceResult brute_force_structure(const GameModel& model,
                                       const OracleBudget& budget) {
  const int num_su = model.num_su();
  const int num_pu = model.num_pu();
  const auto radix = static_cast<std::uint64_t>(num_pu + 1);
  std::uint64_t total = 1;
  for (int s = 0; s < num_su; ++s) {
    if (total > budget.max_structures / radix) {
      throw BudgetExceeded("(|P|+1)^|S| exceeds the structure budget of " +
                           std::to_string(budget.max_structures));
    }
    total *= radix;
  }
  if (total > budget.max_structures) {
    throw BudgetExceeded("(|P|+1)^|S| exceeds the structure budget of " +
                         std::to_string(budget.max_structures));
  }

  const std::size_t subsets = std::size_t{1} << num_su;
  std::vector<std::vector<double>> memo(
      static_cast<std::size_t>(num_pu),
      std::vector<double>(subsets, std::numeric_limits<double>::quiet_NaN()));
  auto value_of = [&](int pu, std::uint32_t mask) {
    double& v = memo[static_cast<std::size_t>(pu)][mask];
    if (std::isnan(v)) {
      std::vector<int> members;
      for (int s = 0; s < num_su; ++s) {
        if (mask >> s & 1U) members.push_back(s);
      }
      v = coalition_value(order_relays(model.table, pu, members,
                                       model.demands[static_cast<std::size_t>(pu)]));
    }
    return v;
  };

  // digits[s] indexes action_set(): 0..P-1 assist, P none. SU 0 is the most
  // significant digit.
  std::vector<int> digits(static_cast<std::size_t>(num_su), 0);
  std::vector<int> best_digits = digits;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(num_pu));
  for (std::uint64_t index = 0; index < total; ++index) {
    std::fill(masks.begin(), masks.end(), 0U);
    for (int s = 0; s < num_su; ++s) {
      const int d = digits[static_cast<std::size_t>(s)];
      if (d < num_pu) masks[static_cast<std::size_t>(d)] |= 1U << s;
    }
    double w = 0.0;
    for (int p = 0; p < num_pu; ++p) {
      w += value_of(p, masks[static_cast<std::size_t>(p)]);
    }
    if (w > best) {
      best = w;
      best_digits = digits;
    }
    for (int s = num_su - 1; s >= 0; --s) {
      int& d = digits[static_cast<std::size_t>(s)];
      if (++d <= num_pu) break;
      d = 0;
    }
  }

  const auto actions = action_set(model);
  std::vector<Action> assignment;
  for (int d : best_digits) assignment.push_back(actions[static_cast<std::size_t>(d)]);
  BruteForceResult out;
  out.structure = make_structure(model, std::move(assignment));
  out.welfare = welfare(out.structure);
  out.evaluated = total;
  return out;
}

PermutationResult best_permutation(const CapacityTable& table, int pu,
                                   std::span<const int> members,
                                   const OracleBudget& budget) {
  const std::vector<int> all = sorted_members(members);
  check_permutation_budget(all.size(), budget);

  PermutationResult best;
  std::size_t best_support = 0;
  bool have = false;
  const std::size_t subsets = std::size_t{1} << all.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> order;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) order.push_back(all[i]);
    }
    do {
      const OrderedCapacityMatrix m = build_matrix(table, pu, order);
      TimeSolution lp = solve_times_lp(m);
      const std::size_t support = full_support_is_optimal(m) ? order.size() : 0;
      const bool better =
          !have || lp.rate > best.rate + kStructuralTol ||
          (lp.rate >= best.rate - kStructuralTol && support > best_support);
      if (better) {
        best.order = order;
        best.rate = lp.rate;
        best.times = std::move(lp);
        best_support = support;
        have = true;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return best;
}

std::optional<std::vector<int>> full_support_order(const CapacityTable& table,
                                                   int pu,
                                                   std::span<const int> members,
                                                   const OracleBudget& budget) {
  std::vector<int> order = sorted_members(members);
  check_permutation_budget(order.size(), budget);
  if (order.empty()) return std::nullopt;
  do {
    const TimeSolution lp = solve_times_lp(build_matrix(table, pu, order));
    if (std::all_of(lp.times.begin(), lp.times.end(),
                    [](double t) { return t > kStructuralTol; })) {
      return order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

OrderGap order_gap(const CapacityTable& table, int pu,
                   std::span<const int> members, const OracleBudget& budget) {
  std::vector<int> order = sorted_members(members);
  check_permutation_budget(order.size(), budget);
  OrderGap gap;
  gap.pu = pu;
  gap.instance = table;
  bool first = true;
  do {
    const double r = solve_times_lp(build_matrix(table, pu, order)).rate;
    if (first || r > gap.best_rate) {
      gap.best_rate = r;
      gap.best_order = order;
    }
    if (first || r < gap.worst_rate) {
      gap.worst_rate = r;
      gap.worst_order = order;
    }
    first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  gap.ratio = gap.best_rate / gap.worst_rate;
  return gap;
}

OrderGap find_order_gap(std::uint64_t seed, int num_relays, int trials,
                        const OracleBudget& budget) {
  if (num_relays < 1 || trials < 1) {
    throw InvalidParams("need at least one relay and one trial");
  }
  check_permutation_budget(static_cast<std::size_t>(num_relays), budget);
  Rng rng(seed);
  std::vector<int> members(static_cast<std::size_t>(num_relays));
  for (int i = 0; i < num_relays; ++i) members[static_cast<std::size_t>(i)] = i;

  OrderGap worst;
  bool have = false;
  for (int trial = 0; trial < trials; ++trial) {
    CapacityTable table(1, num_relays);
    const NodeId bs = NodeId::base_station();
    const NodeId pu = NodeId::primary(0);
    table.set(bs, pu, uniform_real(rng, 0.1, 10.0));
    for (int i = 0; i < num_relays; ++i) {
      const NodeId si = NodeId::secondary(i);
      table.set(bs, si, uniform_real(rng, 0.1, 10.0));
      table.set(si, pu, uniform_real(rng, 0.1, 10.0));
      for (int j = 0; j < num_relays; ++j) {
        if (j != i) table.set(si, NodeId::secondary(j), uniform_real(rng, 0.1, 10.0));
      }
    }
    OrderGap gap = order_gap(table, 0, members, budget);
    if (!have || gap.ratio > worst.ratio) {
      worst = std::move(gap);
      have = true;
    }
  }
  return worst;
}

std::string witness_to_string(const OrderGap& gap) {
  Scenario s;
  s.num_pu = gap.instance.num_pu();
  s.num_su = gap.instance.num_su();
  s.raw_capacities = gap.instance;
  for (int p = 0; p < s.num_pu; ++p) {
    s.demands.push_back(gap.instance.at(NodeId::base_station(), NodeId::primary(p)));
  }
  nlohmann::json j;
  j["scenario"] = nlohmann::json::parse(scenario_to_string(s));
  j["pu"] = gap.pu;
  j["best_order"] = gap.best_order;
  j["best_rate"] = gap.best_rate;
  j["worst_order"] = gap.worst_order;
  j["worst_rate"] = gap.worst_rate;
  j["ratio"] = gap.ratio;
  return j.dump(2) + "\n";
}

}  // namespace coalradio
