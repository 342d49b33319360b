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

#ifndef COALRADIO_CLI_HPP
#define COALRADIO_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coalradio/oracle.hpp"
#include "coalradio/sampler.hpp"
#include "coalradio/scenario.hpp"

namespace coalradio::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kBudgetOrIoError = 2 };

struct GenParams {
  int num_pu = 3;
  int num_su = 10;
  double grid_size = 10.0;
  std::uint64_t seed = 0;
  ScenarioParams physics;
};

struct ExperimentConfig {
  // Exactly one of the two is set.
  std::optional<std::filesystem::path> scenario_path;
  std::optional<GenParams> generate;

  int iterations = 1500;
  TemperatureSchedule schedule = TemperatureSchedule::log_anneal();
  std::uint64_t seed = 0;
  int num_seeds = 1;
  bool oracle = false;
  OracleBudget budget;

  std::optional<std::filesystem::path> trace_path;
  std::optional<std::filesystem::path> structure_path;
  std::optional<std::filesystem::path> summary_path;
};

// "out/trace.csv" -> "out/trace.seed7.csv".
std::filesystem::path per_seed_path(const std::filesystem::path& path,
                                    std::uint64_t seed);

// Each command writes its report to `out` and returns an exit code; library
// errors propagate as exceptions and are mapped by run_cli.
int cmd_gen(const GenParams& params, const std::filesystem::path& out_path,
            std::ostream& out);
int cmd_run(const ExperimentConfig& config, std::ostream& out,
            std::ostream& err);
int cmd_order(const Scenario& scenario, int pu, const std::vector<int>& members,
              bool oracle, std::ostream& out);
int cmd_brute(const Scenario& scenario, const OracleBudget& budget,
              const std::optional<std::filesystem::path>& structure_path,
              std::ostream& out);
int cmd_gap(std::uint64_t seed, int num_relays, int trials,
            const std::optional<std::filesystem::path>& witness_path,
            std::ostream& out);

// Parses argv (subcommands gen, run, order, brute, gap) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace coalradio::cli

#endif  // COALRADIO_CLI_HPP
