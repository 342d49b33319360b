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

#include "coalradio/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "coalradio/errors.hpp"

namespace coalradio {
namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

TemperatureSchedule TemperatureSchedule::log_anneal(double offset) {
  if (!(offset > 0.0) || !std::isfinite(offset)) {
    throw InvalidParams("log schedule offset must be positive");
  }
  return TemperatureSchedule(Kind::kLogAnneal, offset);
}

TemperatureSchedule TemperatureSchedule::fixed(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidParams("temperature must be positive");
  }
  return TemperatureSchedule(Kind::kFixed, temperature);
}

double TemperatureSchedule::at(int iteration) const {
  if (iteration < 1) throw InvalidParams("iterations are numbered from 1");
  if (kind_ == Kind::kFixed) return parameter_;
  return 1.0 / std::log(static_cast<double>(iteration) + parameter_);
}

std::vector<double> gibbs_measure(std::span<const double> values,
                                  double temperature) {
  if (!(temperature > 0.0)) throw InvalidParams("temperature must be positive");
  std::vector<double> p(values.size());
  if (values.empty()) return p;
  const double top = *std::max_element(values.begin(), values.end());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    p[i] = std::exp((values[i] - top) / temperature);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

std::size_t sample_index(std::span<const double> probabilities, Rng& rng) {
  if (probabilities.empty()) throw InvalidParams("empty distribution");
  const double u = uniform01(rng);
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    cumulative += probabilities[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // Rounding left the cumulative sum a hair below one.
  return last_positive;
}

StepResult step(const GameModel& model, const CoalitionStructure& structure,
                Rng& rng, double temperature) {
  StepResult out{structure, {}};
  out.record.temperature = temperature;
  if (model.num_su() == 0) {
    out.record.welfare = welfare(structure);
    out.record.assignment = structure.assignment;
    return out;
  }
  const int mover = static_cast<int>(
      uniform_index(rng, static_cast<std::uint64_t>(model.num_su())));
  const auto actions = action_set(model);
  std::vector<double> values;
  values.reserve(actions.size());
  for (Action a : actions) {
    values.push_back(repercussion_utility(model, structure, mover, a));
  }
  out.record.probabilities = gibbs_measure(values, temperature);
  const Action chosen = actions[sample_index(out.record.probabilities, rng)];
  out.structure = apply_move(model, structure, mover, chosen);
  out.record.mover = mover;
  out.record.action = chosen;
  out.record.welfare = welfare(out.structure);
  out.record.assignment = out.structure.assignment;
  return out;
}

SamplerTrace run(const GameModel& model, const SamplerConfig& config) {
  if (config.max_iterations < 1) {
    throw InvalidParams("max_iterations must be at least 1");
  }
  CoalitionStructure current =
      config.initial_assignment
          ? make_structure(model, *config.initial_assignment)
          : empty_structure(model);
  Rng rng(config.seed);

  SamplerTrace trace;
  trace.initial_welfare = welfare(current);
  trace.best_structure = current;
  trace.best_welfare = trace.initial_welfare;
  trace.records.reserve(static_cast<std::size_t>(config.max_iterations));
  for (int t = 1; t <= config.max_iterations; ++t) {
    StepResult s = step(model, current, rng, config.schedule.at(t));
    s.record.iteration = t;
    if (s.record.welfare > trace.best_welfare) {
      trace.best_welfare = s.record.welfare;
      trace.best_structure = s.structure;
      trace.best_iteration = t;
    }
    s.record.best_welfare = trace.best_welfare;
    trace.records.push_back(std::move(s.record));
    current = std::move(s.structure);
  }
  trace.final_structure = std::move(current);
  return trace;
}

SamplerTrace run(const Scenario& scenario, const SamplerConfig& config) {
  return run(make_game(scenario), config);
}

int first_iteration_reaching(const SamplerTrace& trace, double target,
                             double tol) {
  if (trace.initial_welfare >= target - tol) return 0;
  for (const TraceRecord& r : trace.records) {
    if (r.best_welfare >= target - tol) return r.iteration;
  }
  return -1;
}

std::string trace_to_csv(const SamplerTrace& trace) {
  std::string out = "iteration,mover,temperature,action,welfare,best_welfare\n";
  for (const TraceRecord& r : trace.records) {
    out += std::to_string(r.iteration);
    out += ',';
    out += r.mover < 0 ? std::string("-") : std::to_string(r.mover);
    out += ',';
    out += format_real(r.temperature);
    out += ',';
    out += r.mover < 0 ? std::string("-") : r.action.to_string();
    out += ',';
    out += format_real(r.welfare);
    out += ',';
    out += format_real(r.best_welfare);
    out += '\n';
  }
  return out;
}

}  // namespace coalradio
