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

#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "coalradio/errors.hpp"
#include "coalradio/rng.hpp"
#include "coalradio/scenario.hpp"
#include "coalradio/scenario_io.hpp"

namespace coalradio {
namespace {

// B at the origin, P0 at (d, 0), S0 at (0, d).
Scenario line_scenario(double d, double power, double noise_watts = 1.0) {
  Scenario s;
  s.num_pu = 1;
  s.num_su = 1;
  s.positions = {{0, 0}, {d, 0}, {0, d}};
  s.tx_power_watts = power;
  s.noise = {noise_watts, PowerUnit::kWatts};
  s.demands = {0.1};
  return s;
}

TEST_CASE("linear_from_dbm") {
  CHECK(linear_from_dbm(30) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(linear_from_dbm(0) == doctest::Approx(0.001).epsilon(1e-15));
  CHECK(linear_from_dbm(-40.87) == doctest::Approx(8.185e-8).epsilon(1e-3));
}

TEST_CASE("received_power follows the pathloss law") {
  const NodeId b = NodeId::base_station();
  const NodeId p = NodeId::primary(0);
  CHECK(received_power(line_scenario(1, 0.5), b, p) == doctest::Approx(0.5));
  CHECK(received_power(line_scenario(2, 0.5), b, p) ==
        doctest::Approx(0.047366).epsilon(1e-5));
  CHECK(received_power(line_scenario(1, 0.0), b, p) == 0.0);

  Scenario s = line_scenario(1, 0.5);
  s.positions[2] = s.positions[0];
  CHECK_THROWS_AS(received_power(s, b, NodeId::secondary(0)), ZeroDistance);
}

TEST_CASE("link_capacity is Shannon capacity of the received SNR") {
  const NodeId b = NodeId::base_station();
  const NodeId p = NodeId::primary(0);
  CHECK(link_capacity(line_scenario(1, 1.0), b, p) == doctest::Approx(1.0));
  CHECK(link_capacity(line_scenario(1, 3.0), b, p) == doctest::Approx(2.0));

  Scenario silent = line_scenario(1, 1.0);
  silent.fading = FadingMode::kRayleigh;
  silent.fading_gains.assign(9, 0.0);
  CHECK(link_capacity(silent, b, p) == 0.0);
}

TEST_CASE("link_capacity falls with distance and rises with power") {
  const NodeId b = NodeId::base_station();
  const NodeId p = NodeId::primary(0);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double d = uniform_real(rng, 0.1, 10.0);
    const double e = d + uniform_real(rng, 0.01, 5.0);
    const double power = uniform_real(rng, 0.01, 2.0);
    CHECK(link_capacity(line_scenario(d, power), b, p) >
          link_capacity(line_scenario(e, power), b, p));
    CHECK(link_capacity(line_scenario(d, power * 1.5), b, p) >
          link_capacity(line_scenario(d, power), b, p));
  }
}

TEST_CASE("scaling distances by c scales received power by c^-a") {
  const Scenario s = generate_scenario(3, 10, 10.0, 5);
  Scenario scaled = s;
  const double c = 1.7;
  for (Point& q : scaled.positions) {
    q.x *= c;
    q.y *= c;
  }
  const NodeId b = NodeId::base_station();
  for (int i = 0; i < s.num_su; ++i) {
    const NodeId to = NodeId::secondary(i);
    const double expected =
        received_power(s, b, to) * std::pow(c, -s.pathloss_exponent);
    CHECK(std::abs(received_power(scaled, b, to) - expected) <=
          1e-12 * expected);
  }
}

TEST_CASE("generate_scenario uses the experiment defaults") {
  const Scenario s = generate_scenario(3, 10, 10.0, 42);
  CHECK(s.num_nodes() == 14);
  CHECK(s.position(NodeId::base_station()).x == 5.0);
  CHECK(s.position(NodeId::base_station()).y == 5.0);
  CHECK(s.tx_power_watts == 0.5);
  CHECK(s.pathloss_exponent == 3.4);
  CHECK(s.fading == FadingMode::kOff);
  for (int p = 0; p < 3; ++p) {
    CHECK(s.demands[static_cast<std::size_t>(p)] ==
          link_capacity(s, NodeId::base_station(), NodeId::primary(p)));
  }
  for (const Point& q : s.positions) {
    CHECK(q.x >= 0.0);
    CHECK(q.x <= 10.0);
    CHECK(q.y >= 0.0);
    CHECK(q.y <= 10.0);
  }
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("generate_scenario is a pure function of its arguments") {
  CHECK(scenario_to_string(generate_scenario(3, 10, 10.0, 9)) ==
        scenario_to_string(generate_scenario(3, 10, 10.0, 9)));
  CHECK(scenario_to_string(generate_scenario(3, 10, 10.0, 9)) !=
        scenario_to_string(generate_scenario(3, 10, 10.0, 10)));
  ScenarioParams rayleigh;
  rayleigh.fading = FadingMode::kRayleigh;
  CHECK(scenario_to_string(generate_scenario(2, 4, 10.0, 9, rayleigh)) ==
        scenario_to_string(generate_scenario(2, 4, 10.0, 9, rayleigh)));
}

TEST_CASE("generate_scenario rejects bad parameters") {
  CHECK_THROWS_AS(generate_scenario(0, 3, 10.0, 1), InvalidParams);
  CHECK_THROWS_AS(generate_scenario(1, -1, 10.0, 1), InvalidParams);
  CHECK_THROWS_AS(generate_scenario(1, 3, 0.0, 1), InvalidParams);
  ScenarioParams bad;
  bad.tx_power_watts = -1.0;
  CHECK_THROWS_AS(generate_scenario(1, 3, 10.0, 1, bad), InvalidParams);
}

TEST_CASE("scenario without secondary users") {
  const Scenario s = generate_scenario(1, 0, 10.0, 3);
  CHECK_NOTHROW(validate(s));
  CHECK(capacity_table(s).size() == 1);
}

TEST_CASE("sample_fading draws unit-mean exponential gains") {
  CHECK(sample_fading(5, 1) == sample_fading(5, 1));
  const int n = 448;  // about 10^5 unordered pairs
  const auto g = sample_fading(n, 2024);
  double sum = 0.0;
  int count = 0;
  for (int a = 0; a < n; ++a) {
    CHECK(g[static_cast<std::size_t>(a * n + a)] == 1.0);
    for (int b = a + 1; b < n; ++b) {
      const double v = g[static_cast<std::size_t>(a * n + b)];
      REQUIRE(v >= 0.0);
      REQUIRE(v == g[static_cast<std::size_t>(b * n + a)]);
      sum += v;
      ++count;
    }
  }
  CHECK(count >= 100000);
  CHECK(std::abs(sum / count - 1.0) < 0.02);
}

TEST_CASE("capacity_table covers coalition links only") {
  Scenario s = line_scenario(1, 0.5);
  s.noise = {-40.87, PowerUnit::kDbm};
  s.demands = {1.0};
  const CapacityTable t = capacity_table(s);
  CHECK(t.size() == 3);
  const NodeId b = NodeId::base_station();
  const NodeId p = NodeId::primary(0);
  const NodeId s0 = NodeId::secondary(0);
  CHECK(t.has(b, s0));
  CHECK(t.has(b, p));
  CHECK(t.has(s0, p));
  CHECK_FALSE(t.has(s0, s0));
  CHECK_FALSE(t.has(p, b));
  CHECK_THROWS_AS(t.at(p, s0), MissingLink);
  // B and P0 are both at distance 1 from S0 in opposite directions.
  CHECK(t.at(b, s0) == t.at(b, p));
}

TEST_CASE("capacity table entries are positive and finite") {
  const CapacityTable t = capacity_table(generate_scenario(3, 10, 10.0, 77));
  CHECK(t.size() == 3 + 10 + 30 + 90);
  for (const auto& e : t.entries()) {
    CHECK(std::isfinite(e.capacity));
    CHECK(e.capacity > 0.0);
  }
  CapacityTable u(1, 1);
  CHECK_THROWS_AS(u.set(NodeId::base_station(), NodeId::primary(0), 0.0),
                  InvalidParams);
  CHECK_THROWS_AS(u.set(NodeId::secondary(0), NodeId::secondary(0), 1.0),
                  InvalidParams);
  CHECK_THROWS_AS(u.set(NodeId::secondary(1), NodeId::primary(0), 1.0),
                  InvalidParams);
}

TEST_CASE("validate enforces the demand bound") {
  Scenario s = generate_scenario(2, 3, 10.0, 4);
  s.demands[1] *= 1.01;
  CHECK_THROWS_AS(validate(s), InvalidParams);
  s.demands[1] = 0.0;
  CHECK_THROWS_AS(validate(s), InvalidParams);
}

TEST_CASE("NodeId names round-trip") {
  for (NodeId n : {NodeId::base_station(), NodeId::primary(3),
                   NodeId::secondary(12)}) {
    CHECK(NodeId::parse(n.to_string()) == n);
  }
  CHECK_THROWS_AS(NodeId::parse("Q1"), InvalidParams);
  CHECK_THROWS_AS(NodeId::parse("S"), InvalidParams);
}

TEST_CASE("scenario files round-trip byte for byte") {
  ScenarioParams rayleigh;
  rayleigh.fading = FadingMode::kRayleigh;
  rayleigh.demand_fraction = 0.7;
  for (const Scenario& s : {generate_scenario(3, 10, 10.0, 1),
                            generate_scenario(2, 5, 8.0, 2, rayleigh)}) {
    const std::string text = scenario_to_string(s);
    const Scenario back = scenario_from_string(text);
    CHECK(scenario_to_string(back) == text);
    const CapacityTable a = capacity_table(s);
    const CapacityTable b = capacity_table(back);
    for (const auto& e : a.entries()) {
      CHECK(b.at(e.from, e.to) == e.capacity);
    }
  }
  const auto path =
      std::filesystem::temp_directory_path() / "coalradio_scenario_test.json";
  const Scenario s = generate_scenario(1, 2, 10.0, 3);
  write_scenario(path, s);
  CHECK(read_text_file(path) == scenario_to_string(s));
  CHECK(scenario_to_string(read_scenario(path)) == scenario_to_string(s));
  std::filesystem::remove(path);
}

TEST_CASE("malformed scenario files are validation errors") {
  CHECK_THROWS_AS(scenario_from_string("{"), InvalidParams);
  CHECK_THROWS_AS(scenario_from_string("{\"format\": \"other\"}"),
                  InvalidParams);
  CHECK_THROWS_AS(read_scenario("/nonexistent/dir/file.json"), IoError);
}

}  // namespace
}  // namespace coalradio
