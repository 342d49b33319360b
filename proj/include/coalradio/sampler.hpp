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

#ifndef COALRADIO_SAMPLER_HPP
#define COALRADIO_SAMPLER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coalradio/game.hpp"
#include "coalradio/rng.hpp"

namespace coalradio {

class TemperatureSchedule {
 public:
  enum class Kind { kLogAnneal, kFixed };

  // T(t) = 1 / ln(t + offset). With the default offset the first iteration
  // runs at 1 / ln 2.
  static TemperatureSchedule log_anneal(double offset = 1.0);
  static TemperatureSchedule fixed(double temperature);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  // Temperature of iteration t >= 1.
  double at(int iteration) const;

 private:
  TemperatureSchedule(Kind kind, double parameter)
      : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  double parameter_;
};

struct SamplerConfig {
  int max_iterations = 1500;
  TemperatureSchedule schedule = TemperatureSchedule::log_anneal();
  std::uint64_t seed = 0;
  // Defaults to everybody on None.
  std::optional<std::vector<Action>> initial_assignment;
};

struct TraceRecord {
  int iteration = 0;
  int mover = -1;  // -1 when there is no SU to move
  double temperature = 0.0;
  Action action;
  // Gibbs distribution over action_set(), in that order.
  std::vector<double> probabilities;
  double welfare = 0.0;
  double best_welfare = 0.0;
  std::vector<Action> assignment;  // after the move
};

struct SamplerTrace {
  double initial_welfare = 0.0;
  std::vector<TraceRecord> records;
  CoalitionStructure final_structure;
  CoalitionStructure best_structure;
  double best_welfare = 0.0;
  int best_iteration = 0;  // 0 means the initial structure
};

// exp(v / T) / sum exp(v' / T), evaluated after subtracting max(v) so that
// it cannot overflow. Adding a constant to every value leaves the output
// unchanged.
std::vector<double> gibbs_measure(std::span<const double> values,
                                  double temperature);

// Index drawn from a probability vector with one uniform variate.
std::size_t sample_index(std::span<const double> probabilities, Rng& rng);

struct StepResult {
  CoalitionStructure structure;
  TraceRecord record;
};

// One Gibbs move: a uniformly chosen SU picks its next action from the Gibbs
// measure of its repercussion utilities over action_set().
StepResult step(const GameModel& model, const CoalitionStructure& structure,
                Rng& rng, double temperature);

// Runs config.max_iterations steps. The reported answer is the best
// structure visited. Pure function of (model, config).
SamplerTrace run(const GameModel& model, const SamplerConfig& config);
SamplerTrace run(const Scenario& scenario, const SamplerConfig& config);

// First iteration whose best-so-far welfare is within tol of target; -1 if
// never reached. 0 means the initial structure already did.
int first_iteration_reaching(const SamplerTrace& trace, double target,
                             double tol);

// CSV with header iteration,mover,temperature,action,welfare,best_welfare;
// reals use 12 significant digits.
std::string trace_to_csv(const SamplerTrace& trace);

}  // namespace coalradio

#endif  // COALRADIO_SAMPLER_HPP
