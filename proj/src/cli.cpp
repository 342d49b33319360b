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

#include "coalradio/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>

#include "coalradio/errors.hpp"
#include "coalradio/game.hpp"
#include "coalradio/scenario_io.hpp"

namespace coalradio::cli {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += fmt(v[i]);
  }
  return s;
}

std::vector<int> parse_members(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    if (item[0] == 'S') {
      out.push_back(NodeId::parse(item).index);
      continue;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidParams("member '" + item + "' is not an SU index");
    }
  }
  return out;
}

std::string describe(const TemperatureSchedule& s) {
  if (s.kind() == TemperatureSchedule::Kind::kFixed) {
    return "fixed(T=" + fmt(s.parameter()) + ")";
  }
  return "log(T=1/ln(t+" + fmt(s.parameter()) + "))";
}

void add_gen_options(CLI::App& cmd, GenParams& gen, std::string& fading) {
  cmd.add_option("--pu", gen.num_pu, "number of primary users")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--su", gen.num_su, "number of secondary users")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--grid", gen.grid_size, "side of the square placement grid");
  cmd.add_option("--power", gen.physics.tx_power_watts, "transmit power (W)");
  cmd.add_option("--noise-dbm", gen.physics.noise.value, "noise power (dBm)");
  cmd.add_option("--pathloss", gen.physics.pathloss_exponent,
                 "pathloss exponent");
  cmd.add_option("--fading", fading, "fading model")
      ->check(CLI::IsMember({"off", "rayleigh"}));
  cmd.add_option("--demand-fraction", gen.physics.demand_fraction,
                 "PU demand as a fraction of L(B, p)");
}

void apply_fading(GenParams& gen, const std::string& fading) {
  gen.physics.fading =
      fading == "rayleigh" ? FadingMode::kRayleigh : FadingMode::kOff;
}

Scenario load_or_generate(const ExperimentConfig& config) {
  if (config.scenario_path.has_value() == config.generate.has_value()) {
    throw InvalidParams(
        "give exactly one of a scenario file or generation parameters");
  }
  if (config.scenario_path) return read_scenario(*config.scenario_path);
  const GenParams& g = *config.generate;
  return generate_scenario(g.num_pu, g.num_su, g.grid_size, g.seed, g.physics);
}

}  // namespace

std::filesystem::path per_seed_path(const std::filesystem::path& path,
                                    std::uint64_t seed) {
  std::filesystem::path out = path;
  out.replace_filename(path.stem().string() + ".seed" + std::to_string(seed) +
                       path.extension().string());
  return out;
}

int cmd_gen(const GenParams& params, const std::filesystem::path& out_path,
            std::ostream& out) {
  const Scenario s = generate_scenario(params.num_pu, params.num_su,
                                       params.grid_size, params.seed,
                                       params.physics);
  write_scenario(out_path, s);
  const CapacityTable table = capacity_table(s);
  double lo = 0.0, hi = 0.0, sum = 0.0;
  const auto entries = table.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double c = entries[i].capacity;
    lo = i == 0 ? c : std::min(lo, c);
    hi = i == 0 ? c : std::max(hi, c);
    sum += c;
  }
  out << "wrote " << out_path.string() << "\n";
  out << "nodes: 1 base station, " << s.num_pu << " primary, " << s.num_su
      << " secondary\n";
  out << "noise: " << fmt(s.noise.watts()) << " W\n";
  out << "links: " << entries.size();
  if (!entries.empty()) {
    out << " (min " << fmt(lo) << ", mean "
        << fmt(sum / static_cast<double>(entries.size())) << ", max " << fmt(hi)
        << " bits/s/Hz)";
  }
  out << "\n";
  for (int p = 0; p < s.num_pu; ++p) {
    out << "P" << p << ": L(B,P" << p << ")="
        << fmt(table.at(NodeId::base_station(), NodeId::primary(p)))
        << " demand=" << fmt(s.demands[static_cast<std::size_t>(p)]) << "\n";
  }
  return kOk;
}

int cmd_run(const ExperimentConfig& config, std::ostream& out,
            std::ostream& err) {
  if (config.iterations < 1) throw InvalidParams("--iters must be at least 1");
  if (config.num_seeds < 1) throw InvalidParams("--seeds must be at least 1");
  const Scenario scenario = load_or_generate(config);
  const GameModel model = make_game(scenario);

  std::optional<BruteForceResult> oracle;
  if (config.oracle) {
    try {
      oracle = brute_force_structure(model, config.budget);
    } catch (const BudgetExceeded& e) {
      err << "warning: oracle skipped: " << e.what() << "\n";
    }
  }

  std::vector<std::future<SamplerTrace>> jobs;
  for (int k = 0; k < config.num_seeds; ++k) {
    SamplerConfig sc;
    sc.max_iterations = config.iterations;
    sc.schedule = config.schedule;
    sc.seed = config.seed + static_cast<std::uint64_t>(k);
    jobs.push_back(std::async(std::launch::async,
                              [&model, sc] { return run(model, sc); }));
  }
  std::vector<SamplerTrace> traces;
  for (auto& job : jobs) traces.push_back(job.get());

  std::ostringstream summary;
  summary << "scenario: "
          << (config.scenario_path ? config.scenario_path->string()
                                   : std::string("generated"))
          << "\n";
  summary << "primary_users: " << model.num_pu() << "\n";
  summary << "secondary_users: " << model.num_su() << "\n";
  summary << "schedule: " << describe(config.schedule) << "\n";
  summary << "iterations: " << config.iterations << "\n";
  summary << "oracle_welfare: "
          << (oracle ? fmt(oracle->welfare) : std::string("skipped")) << "\n";

  int hits = 0;
  double best_sum = 0.0;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const SamplerTrace& t = traces[k];
    const std::uint64_t seed = config.seed + k;
    auto target = [&](const std::filesystem::path& p) {
      return config.num_seeds == 1 ? p : per_seed_path(p, seed);
    };
    if (config.trace_path) {
      write_text_file(target(*config.trace_path), trace_to_csv(t));
    }
    if (config.structure_path) {
      write_text_file(target(*config.structure_path),
                      structure_to_string(t.best_structure));
    }
    best_sum += t.best_welfare;
    summary << "seed " << seed << ": best_welfare=" << fmt(t.best_welfare)
            << " best_iteration=" << t.best_iteration
            << " final_welfare=" << fmt(welfare(t.final_structure));
    if (oracle) {
      const double gap = oracle->welfare > 0.0
                             ? (oracle->welfare - t.best_welfare) / oracle->welfare
                             : 0.0;
      const int first = first_iteration_reaching(t, oracle->welfare, 1e-9);
      hits += first >= 0 ? 1 : 0;
      summary << " gap=" << fmt(gap) << " first_optimum_iteration=" << first;
    }
    summary << "\n";
  }
  summary << "mean_best_welfare: "
          << fmt(best_sum / static_cast<double>(traces.size())) << "\n";
  if (oracle) {
    summary << "runs_reaching_optimum: " << hits << "/" << traces.size() << "\n";
  }
  out << summary.str();
  if (config.summary_path) write_text_file(*config.summary_path, summary.str());
  return kOk;
}

int cmd_order(const Scenario& scenario, int pu, const std::vector<int>& members,
              bool oracle, std::ostream& out) {
  const GameModel model = make_game(scenario);
  if (pu < 0 || pu >= model.num_pu()) {
    throw InvalidParams("unknown primary user P" + std::to_string(pu));
  }
  for (int s : members) {
    if (s < 0 || s >= model.num_su()) {
      throw InvalidParams("unknown secondary user S" + std::to_string(s));
    }
  }
  const Coalition c = order_relays(model.table, pu, members,
                                   model.demands[static_cast<std::size_t>(pu)]);
  const OrderedCapacityMatrix m = build_matrix(model.table, pu, c.order);
  const std::vector<double> r = rates(m, c.times);

  out << "coalition of P" << pu << " with members {" << join(members) << "}\n";
  out << "position  node  t_k             receiver  cumulative_rate\n";
  for (std::size_t k = 0; k < c.times.size(); ++k) {
    const std::string tx = k == 0 ? "B" : "S" + std::to_string(c.order[k - 1]);
    const std::string rx = k == c.order.size()
                               ? "P" + std::to_string(pu)
                               : "S" + std::to_string(c.order[k]);
    char line[160];
    std::snprintf(line, sizeof(line), "%-9zu %-5s %-15s %-9s %s\n", k,
                  tx.c_str(), fmt(c.times[k]).c_str(), rx.c_str(),
                  fmt(r[k]).c_str());
    out << line;
  }
  out << "order: (" << join(c.order) << ")\n";
  out << "unused: {" << join(c.unused) << "}\n";
  out << "rate: " << fmt(c.rate) << "\n";
  out << "direct_rate: "
      << fmt(model.table.at(NodeId::base_station(), NodeId::primary(pu)))
      << "\n";
  out << "alpha: " << fmt(c.alpha) << "\n";
  out << "value: " << fmt(coalition_value(c)) << "\n";

  if (oracle) {
    const PermutationResult best = best_permutation(model.table, pu, members);
    out << "oracle_order: (" << join(best.order) << ")\n";
    out << "oracle_times: " << join_reals(best.times.times) << "\n";
    out << "oracle_rate: " << fmt(best.rate) << "\n";
    out << "heuristic_oracle_ratio: " << fmt(c.rate / best.rate) << "\n";
    const auto fs = full_support_order(model.table, pu, members);
    out << "full_support_order: "
        << (fs ? "(" + join(*fs) + ")" : std::string("none")) << "\n";
  }
  return kOk;
}

int cmd_brute(const Scenario& scenario, const OracleBudget& budget,
              const std::optional<std::filesystem::path>& structure_path,
              std::ostream& out) {
  const GameModel model = make_game(scenario);
  const BruteForceResult best = brute_force_structure(model, budget);
  out << "structures: " << best.evaluated << "\n";
  out << "optimum_welfare: " << fmt(best.welfare) << "\n";
  for (const Coalition& c : best.structure.coalitions) {
    out << "P" << c.pu << ": order=(" << join(c.order) << ") unused={"
        << join(c.unused) << "} rate=" << fmt(c.rate)
        << " alpha=" << fmt(c.alpha) << " value=" << fmt(coalition_value(c))
        << "\n";
  }
  out << "nash_stable: "
      << (is_nash_stable(model, best.structure) ? "yes" : "no") << "\n";
  if (structure_path) {
    write_text_file(*structure_path, structure_to_string(best.structure));
  }
  return kOk;
}

int cmd_gap(std::uint64_t seed, int num_relays, int trials,
            const std::optional<std::filesystem::path>& witness_path,
            std::ostream& out) {
  const OrderGap gap = find_order_gap(seed, num_relays, trials);
  out << "ratio: " << fmt(gap.ratio) << "\n";
  out << "best_order: (" << join(gap.best_order) << ") rate=" << fmt(gap.best_rate)
      << "\n";
  out << "worst_order: (" << join(gap.worst_order)
      << ") rate=" << fmt(gap.worst_rate) << "\n";
  if (witness_path) write_text_file(*witness_path, witness_to_string(gap));
  return kOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Coalition formation for cooperative cognitive radio"};
  app.require_subcommand(1);

  GenParams gen;
  std::string gen_fading = "off";
  std::filesystem::path gen_out;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random scenario");
  add_gen_options(*gen_cmd, gen, gen_fading);
  gen_cmd->add_option("--seed", gen.seed, "placement seed");
  gen_cmd->add_option("--out", gen_out, "scenario file to write")->required();

  ExperimentConfig run_cfg;
  GenParams run_gen;
  std::string run_fading = "off";
  std::string scenario_path;
  std::string schedule = "log";
  double temperature = 0.001;
  std::uint64_t max_structures = run_cfg.budget.max_structures;
  std::string trace_path, structure_path, summary_path;
  CLI::App* run_cmd = app.add_subcommand("run", "run annealed Gibbs sampling");
  run_cmd->add_option("--scenario", scenario_path, "scenario file");
  add_gen_options(*run_cmd, run_gen, run_fading);
  run_cmd->add_option("--seed", run_cfg.seed,
                      "sampler seed (also the placement seed when generating)");
  run_cmd->add_option("--iters", run_cfg.iterations, "iterations per chain");
  run_cmd->add_option("--schedule", schedule, "temperature schedule")
      ->check(CLI::IsMember({"log", "fixed"}));
  auto* temp_opt =
      run_cmd->add_option("--temp", temperature, "temperature for --schedule fixed");
  run_cmd->add_flag("--oracle", run_cfg.oracle,
                    "also run the brute-force optimum");
  run_cmd->add_option("--max-structures", max_structures,
                      "brute-force structure budget");
  run_cmd->add_option("--out-trace", trace_path, "trace CSV");
  run_cmd->add_option("--out-structure", structure_path,
                      "best structure file");
  run_cmd->add_option("--out-summary", summary_path, "summary file");
  run_cmd->add_option("--seeds", run_cfg.num_seeds,
                      "number of independent chains (seed, seed+1, ...)");

  std::string order_scenario;
  int order_pu = 0;
  std::string order_members;
  bool order_oracle = false;
  CLI::App* order_cmd =
      app.add_subcommand("order", "order the relays of one coalition");
  order_cmd->add_option("--scenario", order_scenario, "scenario file")
      ->required();
  order_cmd->add_option("--pu", order_pu, "primary user index");
  order_cmd->add_option("--members", order_members,
                        "comma separated SU indices");
  order_cmd->add_flag("--oracle", order_oracle,
                      "compare with every subset and ordering");

  std::string brute_scenario;
  GenParams brute_gen;
  std::string brute_fading = "off";
  std::uint64_t brute_max = OracleBudget{}.max_structures;
  std::string brute_structure;
  CLI::App* brute_cmd =
      app.add_subcommand("brute", "exhaustive search over coalition structures");
  brute_cmd->add_option("--scenario", brute_scenario, "scenario file");
  add_gen_options(*brute_cmd, brute_gen, brute_fading);
  brute_cmd->add_option("--seed", brute_gen.seed, "placement seed");
  brute_cmd->add_option("--max-structures", brute_max,
                        "brute-force structure budget");
  brute_cmd->add_option("--out-structure", brute_structure,
                        "optimal structure file");

  std::uint64_t gap_seed = 0;
  int gap_relays = 2;
  int gap_trials = 10000;
  std::string gap_witness;
  CLI::App* gap_cmd = app.add_subcommand(
      "gap", "search random instances for a large relay-order rate gap");
  gap_cmd->add_option("--seed", gap_seed, "sampling seed");
  gap_cmd->add_option("--relays", gap_relays, "relays per instance");
  gap_cmd->add_option("--trials", gap_trials, "instances to sample");
  gap_cmd->add_option("--out-witness", gap_witness, "witness file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  auto generation_given = [](const CLI::App& cmd) {
    for (const char* name : {"--pu", "--su", "--grid", "--power", "--noise-dbm",
                             "--pathloss", "--fading", "--demand-fraction"}) {
      if (cmd.count(name) > 0) return true;
    }
    return false;
  };

  try {
    if (*gen_cmd) {
      apply_fading(gen, gen_fading);
      return cmd_gen(gen, gen_out, out);
    }
    if (*run_cmd) {
      if (!scenario_path.empty()) {
        if (generation_given(*run_cmd)) {
          throw InvalidParams(
              "--scenario cannot be combined with generation parameters");
        }
        run_cfg.scenario_path = scenario_path;
      } else {
        apply_fading(run_gen, run_fading);
        run_gen.seed = run_cfg.seed;
        run_cfg.generate = run_gen;
      }
      if (schedule == "fixed") {
        run_cfg.schedule = TemperatureSchedule::fixed(temperature);
      } else if (temp_opt->count() > 0) {
        throw InvalidParams("--temp only applies to --schedule fixed");
      }
      run_cfg.budget.max_structures = max_structures;
      if (!trace_path.empty()) run_cfg.trace_path = trace_path;
      if (!structure_path.empty()) run_cfg.structure_path = structure_path;
      if (!summary_path.empty()) run_cfg.summary_path = summary_path;
      return cmd_run(run_cfg, out, err);
    }
    if (*order_cmd) {
      return cmd_order(read_scenario(order_scenario), order_pu,
                       parse_members(order_members), order_oracle, out);
    }
    if (*brute_cmd) {
      Scenario s;
      if (!brute_scenario.empty()) {
        if (generation_given(*brute_cmd)) {
          throw InvalidParams(
              "--scenario cannot be combined with generation parameters");
        }
        s = read_scenario(brute_scenario);
      } else {
        apply_fading(brute_gen, brute_fading);
        s = generate_scenario(brute_gen.num_pu, brute_gen.num_su,
                              brute_gen.grid_size, brute_gen.seed,
                              brute_gen.physics);
      }
      OracleBudget budget;
      budget.max_structures = brute_max;
      std::optional<std::filesystem::path> sp;
      if (!brute_structure.empty()) sp = brute_structure;
      return cmd_brute(s, budget, sp, out);
    }
    if (*gap_cmd) {
      std::optional<std::filesystem::path> wp;
      if (!gap_witness.empty()) wp = gap_witness;
      return cmd_gap(gap_seed, gap_relays, gap_trials, wp, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetOrIoError;
  }
  return kValidationError;
}

}  // namespace coalradio::cli
