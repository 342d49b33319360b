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

#include "coalradio/scenario.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "coalradio/errors.hpp"
#include "coalradio/rng.hpp"

namespace coalradio {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int dense_index_of(NodeId n, int num_pu) {
  switch (n.kind) {
    case NodeKind::kBaseStation:
      return 0;
    case NodeKind::kPrimary:
      return 1 + n.index;
    case NodeKind::kSecondary:
      return 1 + num_pu + n.index;
  }
  return -1;
}

NodeId node_at(int dense, int num_pu) {
  if (dense == 0) return NodeId::base_station();
  if (dense <= num_pu) return NodeId::primary(dense - 1);
  return NodeId::secondary(dense - 1 - num_pu);
}

bool valid_node_of(NodeId n, int num_pu, int num_su) {
  switch (n.kind) {
    case NodeKind::kBaseStation:
      return n.index == 0;
    case NodeKind::kPrimary:
      return n.index >= 0 && n.index < num_pu;
    case NodeKind::kSecondary:
      return n.index >= 0 && n.index < num_su;
  }
  return false;
}

}  // namespace

std::string NodeId::to_string() const {
  switch (kind) {
    case NodeKind::kBaseStation:
      return "B";
    case NodeKind::kPrimary:
      return "P" + std::to_string(index);
    case NodeKind::kSecondary:
      return "S" + std::to_string(index);
  }
  return "?";
}

NodeId NodeId::parse(std::string_view name) {
  if (name == "B") return base_station();
  if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'S')) {
    int index = -1;
    const char* first = name.data() + 1;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec == std::errc() && ptr == last && index >= 0) {
      return name[0] == 'P' ? primary(index) : secondary(index);
    }
  }
  throw InvalidParams("malformed node name '" + std::string(name) + "'");
}

double NoiseSpec::watts() const {
  return unit == PowerUnit::kDbm ? linear_from_dbm(value) : value;
}

CapacityTable::CapacityTable(int num_pu, int num_su)
    : num_pu_(num_pu), num_su_(num_su) {
  if (num_pu < 0 || num_su < 0) {
    throw InvalidParams("negative node count in capacity table");
  }
  const auto n = static_cast<std::size_t>(num_nodes());
  capacity_.assign(n * n, kNaN);
}

bool CapacityTable::valid_node(NodeId n) const {
  return valid_node_of(n, num_pu_, num_su_);
}

int CapacityTable::dense_index(NodeId n) const {
  return dense_index_of(n, num_pu_);
}

void CapacityTable::set(NodeId from, NodeId to, double capacity) {
  if (!valid_node(from) || !valid_node(to)) {
    throw InvalidParams("capacity entry " + from.to_string() + "->" +
                        to.to_string() + " names an unknown node");
  }
  if (from == to) {
    throw InvalidParams("self link " + from.to_string() + " in capacity table");
  }
  if (!(capacity > 0.0) || !std::isfinite(capacity)) {
    throw InvalidParams("capacity " + from.to_string() + "->" +
                        to.to_string() + " must be positive and finite");
  }
  capacity_[static_cast<std::size_t>(dense_index(from) * num_nodes() +
                                     dense_index(to))] = capacity;
}

bool CapacityTable::has(NodeId from, NodeId to) const {
  if (!valid_node(from) || !valid_node(to)) return false;
  return !std::isnan(capacity_[static_cast<std::size_t>(
      dense_index(from) * num_nodes() + dense_index(to))]);
}

double CapacityTable::at(NodeId from, NodeId to) const {
  if (!has(from, to)) {
    throw MissingLink("no capacity for link " + from.to_string() + "->" +
                      to.to_string());
  }
  return capacity_[static_cast<std::size_t>(dense_index(from) * num_nodes() +
                                            dense_index(to))];
}

std::vector<CapacityTable::Entry> CapacityTable::entries() const {
  std::vector<Entry> out;
  const int n = num_nodes();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double c = capacity_[static_cast<std::size_t>(a * n + b)];
      if (!std::isnan(c)) {
        out.push_back({node_at(a, num_pu_), node_at(b, num_pu_), c});
      }
    }
  }
  return out;
}

std::size_t CapacityTable::size() const {
  std::size_t count = 0;
  for (double c : capacity_) count += std::isnan(c) ? 0 : 1;
  return count;
}

bool Scenario::valid_node(NodeId n) const {
  return valid_node_of(n, num_pu, num_su);
}

int Scenario::dense_index(NodeId n) const { return dense_index_of(n, num_pu); }

Point Scenario::position(NodeId n) const {
  if (!valid_node(n)) {
    throw InvalidParams("unknown node " + n.to_string());
  }
  if (positions.empty()) {
    throw InvalidParams("scenario carries no geometry");
  }
  return positions[static_cast<std::size_t>(dense_index(n))];
}

double Scenario::fading_gain(NodeId a, NodeId b) const {
  if (fading == FadingMode::kOff || fading_gains.empty()) return 1.0;
  const auto n = static_cast<std::size_t>(num_nodes());
  return fading_gains[static_cast<std::size_t>(dense_index(a)) * n +
                      static_cast<std::size_t>(dense_index(b))];
}

double linear_from_dbm(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double distance(const Scenario& scenario, NodeId a, NodeId b) {
  const Point pa = scenario.position(a);
  const Point pb = scenario.position(b);
  return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

double received_power(const Scenario& scenario, NodeId from, NodeId to) {
  const double d = distance(scenario, from, to);
  if (!(d > 0.0)) {
    throw ZeroDistance("nodes " + from.to_string() + " and " + to.to_string() +
                       " coincide");
  }
  return std::pow(d, -scenario.pathloss_exponent) * scenario.tx_power_watts;
}

double link_capacity(const Scenario& scenario, NodeId from, NodeId to) {
  if (scenario.is_raw()) return scenario.raw_capacities->at(from, to);
  const double snr = scenario.fading_gain(from, to) *
                     received_power(scenario, from, to) /
                     scenario.noise.watts();
  return std::log2(1.0 + snr);
}

std::vector<double> sample_fading(int num_nodes, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(num_nodes);
  std::vector<double> gains(n * n, 1.0);
  Rng rng(seed);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // |h| Rayleigh with E|h|^2 = 1 means |h|^2 is unit-mean exponential.
      const double g = -std::log1p(-uniform01(rng));
      gains[a * n + b] = g;
      gains[b * n + a] = g;
    }
  }
  return gains;
}

Scenario generate_scenario(int num_pu, int num_su, double grid_size,
                           std::uint64_t seed, const ScenarioParams& params) {
  if (num_pu < 1 || num_su < 0) {
    throw InvalidParams("need at least one primary user and no negative counts");
  }
  if (!(grid_size > 0.0) || !std::isfinite(grid_size)) {
    throw InvalidParams("grid size must be positive");
  }
  if (!(params.tx_power_watts > 0.0) || !(params.noise.watts() > 0.0) ||
      !(params.pathloss_exponent > 0.0)) {
    throw InvalidParams("power, noise and pathloss exponent must be positive");
  }
  if (!(params.demand_fraction > 0.0) || params.demand_fraction > 1.0) {
    throw InvalidParams("demand fraction must lie in (0, 1]");
  }

  Scenario s;
  s.num_pu = num_pu;
  s.num_su = num_su;
  s.tx_power_watts = params.tx_power_watts;
  s.noise = params.noise;
  s.pathloss_exponent = params.pathloss_exponent;
  s.fading = params.fading;
  s.seed = seed;

  Rng rng(seed);
  s.positions.push_back({grid_size / 2.0, grid_size / 2.0});
  const int n = s.num_nodes();
  while (static_cast<int>(s.positions.size()) < n) {
    const Point p{uniform_real(rng, 0.0, grid_size),
                  uniform_real(rng, 0.0, grid_size)};
    bool clash = false;
    for (const Point& q : s.positions) {
      clash = clash || (p.x == q.x && p.y == q.y);
    }
    if (!clash) s.positions.push_back(p);
  }

  if (s.fading == FadingMode::kRayleigh) {
    s.fading_seed = seed ^ 0x9E3779B97F4A7C15ULL;
    s.fading_gains = sample_fading(n, s.fading_seed);
  }

  for (int p = 0; p < num_pu; ++p) {
    s.demands.push_back(params.demand_fraction *
                        link_capacity(s, NodeId::base_station(),
                                      NodeId::primary(p)));
  }
  return s;
}

CapacityTable capacity_table(const Scenario& scenario) {
  if (scenario.is_raw()) return *scenario.raw_capacities;
  CapacityTable table(scenario.num_pu, scenario.num_su);
  const NodeId bs = NodeId::base_station();
  for (int p = 0; p < scenario.num_pu; ++p) {
    const NodeId pu = NodeId::primary(p);
    table.set(bs, pu, link_capacity(scenario, bs, pu));
  }
  for (int s = 0; s < scenario.num_su; ++s) {
    const NodeId su = NodeId::secondary(s);
    table.set(bs, su, link_capacity(scenario, bs, su));
    for (int p = 0; p < scenario.num_pu; ++p) {
      const NodeId pu = NodeId::primary(p);
      table.set(su, pu, link_capacity(scenario, su, pu));
    }
    for (int r = 0; r < scenario.num_su; ++r) {
      if (r == s) continue;
      const NodeId other = NodeId::secondary(r);
      table.set(su, other, link_capacity(scenario, su, other));
    }
  }
  return table;
}

void validate(const Scenario& scenario) {
  if (scenario.num_pu < 1 || scenario.num_su < 0) {
    throw InvalidParams("scenario needs at least one primary user");
  }
  if (static_cast<int>(scenario.demands.size()) != scenario.num_pu) {
    throw InvalidParams("expected one demand per primary user");
  }
  if (scenario.is_raw()) {
    const CapacityTable& t = *scenario.raw_capacities;
    if (t.num_pu() != scenario.num_pu || t.num_su() != scenario.num_su) {
      throw InvalidParams("capacity table size disagrees with node counts");
    }
  } else {
    if (static_cast<int>(scenario.positions.size()) != scenario.num_nodes()) {
      throw InvalidParams("expected one position per node");
    }
    if (!(scenario.tx_power_watts > 0.0) || !(scenario.noise.watts() > 0.0) ||
        !(scenario.pathloss_exponent > 0.0)) {
      throw InvalidParams("power, noise and pathloss exponent must be positive");
    }
    if (scenario.fading == FadingMode::kRayleigh &&
        scenario.fading_gains.size() !=
            static_cast<std::size_t>(scenario.num_nodes() * scenario.num_nodes())) {
      throw InvalidParams("fading gains missing for Rayleigh scenario");
    }
    const auto& pos = scenario.positions;
    for (std::size_t a = 0; a < pos.size(); ++a) {
      for (std::size_t b = a + 1; b < pos.size(); ++b) {
        if (pos[a].x == pos[b].x && pos[a].y == pos[b].y) {
          throw InvalidParams("two nodes share a position");
        }
      }
    }
  }
  for (int p = 0; p < scenario.num_pu; ++p) {
    const double demand = scenario.demands[static_cast<std::size_t>(p)];
    const double direct =
        link_capacity(scenario, NodeId::base_station(), NodeId::primary(p));
    if (!(demand > 0.0) || demand > direct * (1.0 + 1e-12)) {
      throw InvalidParams("demand of P" + std::to_string(p) +
                          " must lie in (0, L(B, P" + std::to_string(p) + ")]");
    }
  }
}

}  // namespace coalradio
