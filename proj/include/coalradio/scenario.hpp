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

#ifndef COALRADIO_SCENARIO_HPP
#define COALRADIO_SCENARIO_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coalradio {

enum class NodeKind { kBaseStation, kPrimary, kSecondary };

// A node of the downlink network: the base station, a primary user (PU) or a
// secondary user (SU). Ordering is base station < primaries < secondaries,
// then by index.
struct NodeId {
  NodeKind kind = NodeKind::kBaseStation;
  int index = 0;

  static constexpr NodeId base_station() { return {NodeKind::kBaseStation, 0}; }
  static constexpr NodeId primary(int i) { return {NodeKind::kPrimary, i}; }
  static constexpr NodeId secondary(int i) { return {NodeKind::kSecondary, i}; }

  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;

  // "B", "P<i>" or "S<i>".
  std::string to_string() const;
  // Inverse of to_string; throws InvalidParams on malformed names.
  static NodeId parse(std::string_view name);
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class FadingMode { kOff, kRayleigh };
enum class PowerUnit { kWatts, kDbm };

// Noise power as written by the user; the library always works in watts.
struct NoiseSpec {
  double value = 0.0;
  PowerUnit unit = PowerUnit::kWatts;

  double watts() const;
};

// Link capacities in bits/s/Hz keyed by (transmitter, receiver). Storage is a
// dense square array over all nodes; absent links are NaN.
class CapacityTable {
 public:
  struct Entry {
    NodeId from;
    NodeId to;
    double capacity;
  };

  CapacityTable() = default;
  CapacityTable(int num_pu, int num_su);

  int num_pu() const { return num_pu_; }
  int num_su() const { return num_su_; }
  int num_nodes() const { return 1 + num_pu_ + num_su_; }

  // Throws InvalidParams for unknown nodes, self links and capacities that
  // are not strictly positive and finite.
  void set(NodeId from, NodeId to, double capacity);
  bool has(NodeId from, NodeId to) const;
  // Throws MissingLink when the entry is absent.
  double at(NodeId from, NodeId to) const;

  // Present entries in (from, to) order.
  std::vector<Entry> entries() const;
  std::size_t size() const;

  bool valid_node(NodeId n) const;
  int dense_index(NodeId n) const;

 private:
  int num_pu_ = 0;
  int num_su_ = 0;
  std::vector<double> capacity_;
};

// Network geometry, radio parameters and PU demands. A scenario either
// carries node positions (capacities follow from the pathloss model) or a
// raw capacity table that bypasses the physics entirely.
struct Scenario {
  int num_pu = 0;
  int num_su = 0;

  // Dense node order: base station, primaries, secondaries. Empty for raw
  // table scenarios.
  std::vector<Point> positions;
  double tx_power_watts = 0.5;
  NoiseSpec noise{-40.87, PowerUnit::kDbm};
  double pathloss_exponent = 3.4;
  FadingMode fading = FadingMode::kOff;
  std::uint64_t fading_seed = 0;
  // |h|^2 per node pair (dense, symmetric); empty when fading is off.
  std::vector<double> fading_gains;

  // R_p demand per primary user, bits/s/Hz.
  std::vector<double> demands;
  std::uint64_t seed = 0;

  std::optional<CapacityTable> raw_capacities;

  int num_nodes() const { return 1 + num_pu + num_su; }
  bool is_raw() const { return raw_capacities.has_value(); }
  bool valid_node(NodeId n) const;
  int dense_index(NodeId n) const;
  Point position(NodeId n) const;
  double fading_gain(NodeId a, NodeId b) const;
};

struct ScenarioParams {
  double tx_power_watts = 0.5;
  NoiseSpec noise{-40.87, PowerUnit::kDbm};
  double pathloss_exponent = 3.4;
  FadingMode fading = FadingMode::kOff;
  // Each PU demand is this fraction of its direct base-station capacity.
  double demand_fraction = 1.0;
};

// 10^((dbm - 30) / 10).
double linear_from_dbm(double dbm);

double distance(const Scenario& scenario, NodeId a, NodeId b);

// d^-a * P. Throws ZeroDistance when the nodes coincide.
double received_power(const Scenario& scenario, NodeId from, NodeId to);

// log2(1 + |h|^2 P^R / N0). Raw table scenarios return the table entry.
double link_capacity(const Scenario& scenario, NodeId from, NodeId to);

// Uniform placement of PUs and SUs on [0, grid_size]^2 with the base station
// at the centre. Pure function of its arguments.
Scenario generate_scenario(int num_pu, int num_su, double grid_size,
                           std::uint64_t seed,
                           const ScenarioParams& params = {});

// |h|^2 ~ Exp(1) i.i.d. per unordered node pair, returned as a dense
// symmetric num_nodes x num_nodes array with unit diagonal.
std::vector<double> sample_fading(int num_nodes, std::uint64_t seed);

// Every link a coalition can use: B->s, B->p, s->s' and s->p.
CapacityTable capacity_table(const Scenario& scenario);

// Checks the scenario invariants: sizes, positive parameters, distinct node
// positions and R_p <= L(B, p). Throws InvalidParams.
void validate(const Scenario& scenario);

}  // namespace coalradio

#endif  // COALRADIO_SCENARIO_HPP
