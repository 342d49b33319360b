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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coalradio/errors.hpp"
#include "coalradio/sampler.hpp"
#include "fixtures.hpp"

namespace coalradio {
namespace {

double total(const std::vector<double>& p) {
  return std::accumulate(p.begin(), p.end(), 0.0);
}

GameModel busy_game(int num_pu, int num_su, std::uint64_t seed) {
  ScenarioParams params;
  params.demand_fraction = 0.6;
  return make_game(generate_scenario(num_pu, num_su, 10.0, seed, params));
}

TEST_CASE("temperature schedules") {
  const auto log = TemperatureSchedule::log_anneal();
  CHECK(log.at(1) == doctest::Approx(1.0 / std::log(2.0)));
  CHECK(log.at(1499) == doctest::Approx(1.0 / std::log(1500.0)));
  for (int t = 1; t < 3000; ++t) CHECK(log.at(t) > 0.0);
  CHECK(TemperatureSchedule::fixed(0.001).at(1) == 0.001);
  CHECK(TemperatureSchedule::fixed(0.001).at(1500) == 0.001);
  CHECK_THROWS_AS(TemperatureSchedule::fixed(0.0), InvalidParams);
  CHECK_THROWS_AS(TemperatureSchedule::log_anneal(0.0), InvalidParams);
  CHECK_THROWS_AS(log.at(0), InvalidParams);
}

TEST_CASE("gibbs_measure examples") {
  const std::vector<double> even{1, 1};
  CHECK(gibbs_measure(even, 0.3) == std::vector<double>{0.5, 0.5});

  const double temp = 0.7;
  const std::vector<double> two{0, temp * std::log(2.0)};
  const auto p = gibbs_measure(two, temp);
  CHECK(p[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(2.0 / 3).epsilon(1e-14));

  // e^-1000 is below the smallest double, so the winner takes all exactly.
  const std::vector<double> greedy{0, 1};
  const auto g = gibbs_measure(greedy, 0.001);
  CHECK(g[1] == 1.0);
  CHECK(g[0] <= 1e-300);
  CHECK(total(g) == 1.0);

  const std::vector<double> wide{0, 2000};
  const auto w = gibbs_measure(wide, 1.0);
  CHECK(std::isfinite(w[0]));
  CHECK(w[1] == 1.0);

  CHECK_THROWS_AS(gibbs_measure(even, 0.0), InvalidParams);
}

TEST_CASE("gibbs_measure is shift invariant and normalized") {
  Rng rng(1);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto n = static_cast<std::size_t>(1 + uniform_index(rng, 8));
    std::vector<double> v(n);
    for (double& x : v) x = uniform_real(rng, -50.0, 50.0);
    const double temp = std::exp(uniform_real(rng, -8.0, 6.0));
    const auto p = gibbs_measure(v, temp);
    REQUIRE(std::abs(total(p) - 1.0) <= 1e-12);
    if (trial % 10 == 0) {
      // Shifting by a max element keeps every difference exact.
      std::vector<double> shifted(v);
      const double c = *std::max_element(v.begin(), v.end());
      for (double& x : shifted) x -= c;
      REQUIRE(gibbs_measure(shifted, temp) == p);
    }
  }
}

TEST_CASE("gibbs_measure limits") {
  const std::vector<double> v{0.3, 0.9, 0.9, 0.1};
  const auto cold = gibbs_measure(v, 1e-6);
  CHECK(cold[1] == doctest::Approx(0.5));
  CHECK(cold[2] == doctest::Approx(0.5));
  CHECK(cold[0] < 1e-12);
  const auto hot = gibbs_measure(v, 1e9);
  for (double p : hot) CHECK(p == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("sample_index follows the distribution") {
  Rng rng(2);
  const std::vector<double> p{0.1, 0.6, 0.3};
  std::vector<int> count(3, 0);
  for (int i = 0; i < 100000; ++i) ++count[sample_index(p, rng)];
  CHECK(count[0] / 1e5 == doctest::Approx(0.1).epsilon(0.05));
  CHECK(count[1] / 1e5 == doctest::Approx(0.6).epsilon(0.02));
  CHECK(count[2] / 1e5 == doctest::Approx(0.3).epsilon(0.03));
  const std::vector<double> sure{0.0, 1.0};
  for (int i = 0; i < 1000; ++i) CHECK(sample_index(sure, rng) == 1);
}

TEST_CASE("step without secondary users changes nothing") {
  const GameModel model = busy_game(2, 0, 3);
  Rng rng(1);
  const Rng before = rng;
  const StepResult r = step(model, empty_structure(model), rng, 1.0);
  CHECK(r.structure.assignment.empty());
  CHECK(r.record.mover == -1);
  CHECK(r.record.welfare == 0.0);
  CHECK(static_cast<bool>(rng == before));
}

TEST_CASE("cold steps pick the best action") {
  const GameModel model = busy_game(2, 4, 12);
  Rng init(7);
  const auto actions = action_set(model);
  std::vector<Action> start;
  for (int s = 0; s < 4; ++s) {
    start.push_back(actions[uniform_index(init, actions.size())]);
  }
  const CoalitionStructure cs = make_structure(model, start);

  // Argmax per mover when it is unique.
  std::vector<int> best(4, -1);
  for (int s = 0; s < 4; ++s) {
    std::vector<double> r;
    for (Action a : actions) r.push_back(repercussion_utility(model, cs, s, a));
    const auto top = std::max_element(r.begin(), r.end());
    if (std::count(r.begin(), r.end(), *top) == 1) {
      best[static_cast<std::size_t>(s)] = static_cast<int>(top - r.begin());
    }
  }
  REQUIRE(std::count(best.begin(), best.end(), -1) < 4);

  Rng rng(99);
  int trials = 0;
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const StepResult r = step(model, cs, rng, 1e-6);
    const int want = best[static_cast<std::size_t>(r.record.mover)];
    if (want < 0) continue;
    ++trials;
    hits += r.record.action == actions[static_cast<std::size_t>(want)] ? 1 : 0;
  }
  REQUIRE(trials > 1000);
  CHECK(static_cast<double>(hits) / trials >= 0.999);
}

TEST_CASE("run records a consistent trace") {
  const GameModel model = busy_game(3, 8, 5);
  SamplerConfig config;
  config.max_iterations = 300;
  config.seed = 17;
  const SamplerTrace trace = run(model, config);
  REQUIRE(trace.records.size() == 300);
  double best = trace.initial_welfare;
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const TraceRecord& r = trace.records[i];
    CHECK(r.iteration == static_cast<int>(i) + 1);
    CHECK(r.temperature == config.schedule.at(r.iteration));
    CHECK(r.probabilities.size() == 4);
    CHECK(std::abs(total(r.probabilities) - 1.0) <= 1e-12);
    CHECK(r.assignment[static_cast<std::size_t>(r.mover)] == r.action);
    CHECK(std::abs(welfare(make_structure(model, r.assignment)) - r.welfare) <=
          1e-10);
    CHECK(r.best_welfare >= best);
    best = std::max(best, r.welfare);
    CHECK(r.best_welfare == best);
  }
  CHECK(trace.best_welfare == best);
  CHECK(welfare(trace.best_structure) == doctest::Approx(best).epsilon(1e-12));
  CHECK(trace.final_structure.assignment == trace.records.back().assignment);
  if (trace.best_iteration > 0) {
    CHECK(trace.records[static_cast<std::size_t>(trace.best_iteration - 1)]
              .welfare == trace.best_welfare);
  }
}

TEST_CASE("run is a pure function of model and config") {
  const GameModel model = busy_game(3, 10, 6);
  SamplerConfig config;
  config.seed = 3;
  config.max_iterations = 500;
  const std::string a = trace_to_csv(run(model, config));
  CHECK(a == trace_to_csv(run(model, config)));
  config.seed = 4;
  CHECK(a != trace_to_csv(run(model, config)));
}

TEST_CASE("run from a given start and without SUs") {
  const GameModel empty = busy_game(1, 0, 1);
  SamplerConfig config;
  config.max_iterations = 5;
  const SamplerTrace t = run(empty, config);
  CHECK(t.records.size() == 5);
  for (const TraceRecord& r : t.records) {
    CHECK(r.mover == -1);
    CHECK(r.welfare == 0.0);
  }
  CHECK(t.best_welfare == 0.0);

  const GameModel model = busy_game(2, 3, 2);
  config.initial_assignment =
      std::vector<Action>{Action::assist(0), Action::assist(0), Action::none()};
  const SamplerTrace u = run(model, config);
  CHECK(u.initial_welfare ==
        welfare(make_structure(model, *config.initial_assignment)));
  config.max_iterations = 0;
  CHECK_THROWS_AS(run(model, config), InvalidParams);
}

TEST_CASE("first_iteration_reaching and the CSV layout") {
  const GameModel model = busy_game(2, 4, 8);
  SamplerConfig config;
  config.max_iterations = 50;
  const SamplerTrace t = run(model, config);
  CHECK(first_iteration_reaching(t, t.best_welfare, 1e-12) ==
        t.best_iteration);
  CHECK(first_iteration_reaching(t, t.best_welfare + 1.0, 1e-12) == -1);
  CHECK(first_iteration_reaching(t, t.initial_welfare, 1e-12) == 0);

  const std::string csv = trace_to_csv(t);
  CHECK(csv.rfind("iteration,mover,temperature,action,welfare,best_welfare\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 51);
}

}  // namespace
}  // namespace coalradio
