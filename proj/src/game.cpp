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

#include "coalradio/game.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

#include "coalradio/errors.hpp"

namespace coalradio {
namespace {

using nlohmann::json;

Coalition build_coalition(const GameModel& model, int pu,
                          const std::vector<int>& members) {
  return order_relays(model.table, pu, members,
                      model.demands[static_cast<std::size_t>(pu)]);
}

void check_su(const GameModel& model, int su) {
  if (su < 0 || su >= model.num_su()) {
    throw InvalidParams("unknown secondary user S" + std::to_string(su));
  }
}

void check_action(const GameModel& model, Action a) {
  if (!model.valid_action(a)) {
    throw InvalidParams("action " + a.to_string() + " names an unknown PU");
  }
}

}  // namespace

std::string Action::to_string() const {
  return is_none() ? "none" : "P" + std::to_string(pu_);
}

Action Action::parse(std::string_view text) {
  if (text == "none") return none();
  if (text.size() >= 2 && text[0] == 'P') {
    int pu = -1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data() + 1, last, pu);
    if (ec == std::errc() && ptr == last && pu >= 0) return assist(pu);
  }
  throw InvalidParams("malformed action '" + std::string(text) + "'");
}

GameModel make_game(const Scenario& scenario) {
  validate(scenario);
  return GameModel{capacity_table(scenario), scenario.demands};
}

std::vector<Action> action_set(const GameModel& model) {
  std::vector<Action> out;
  for (int p = 0; p < model.num_pu(); ++p) out.push_back(Action::assist(p));
  out.push_back(Action::none());
  return out;
}

std::vector<int> CoalitionStructure::members_of(int pu) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < assignment.size(); ++s) {
    if (assignment[s] == Action::assist(pu)) out.push_back(static_cast<int>(s));
  }
  return out;
}

CoalitionStructure make_structure(const GameModel& model,
                                  std::vector<Action> assignment) {
  if (static_cast<int>(assignment.size()) != model.num_su()) {
    throw InvalidParams("assignment must list one action per SU");
  }
  for (Action a : assignment) check_action(model, a);
  CoalitionStructure cs;
  cs.assignment = std::move(assignment);
  for (int p = 0; p < model.num_pu(); ++p) {
    cs.coalitions.push_back(build_coalition(model, p, cs.members_of(p)));
  }
  return cs;
}

CoalitionStructure empty_structure(const GameModel& model) {
  return make_structure(
      model, std::vector<Action>(static_cast<std::size_t>(model.num_su())));
}

double welfare(const CoalitionStructure& structure) {
  double w = 0.0;
  for (const Coalition& c : structure.coalitions) w += coalition_value(c);
  return w;
}

double repercussion_utility(const GameModel& model,
                            const CoalitionStructure& structure, int su,
                            Action target) {
  check_su(model, su);
  check_action(model, target);
  if (target.is_none()) return 0.0;

  std::vector<int> without = structure.members_of(target.pu());
  without.erase(std::remove(without.begin(), without.end(), su), without.end());
  std::vector<int> with = without;
  with.insert(std::upper_bound(with.begin(), with.end(), su), su);

  const Coalition joined = build_coalition(model, target.pu(), with);
  const Coalition left = build_coalition(model, target.pu(), without);
  double r = member_utility(joined, su);
  for (int j : without) {
    r -= member_utility(left, j) - member_utility(joined, j);
  }
  return r;
}

CoalitionStructure apply_move(const GameModel& model,
                              const CoalitionStructure& structure, int su,
                              Action target) {
  check_su(model, su);
  check_action(model, target);
  const Action source = structure.assignment[static_cast<std::size_t>(su)];
  CoalitionStructure next = structure;
  if (source == target) return next;
  next.assignment[static_cast<std::size_t>(su)] = target;
  for (Action touched : {source, target}) {
    if (touched.is_none()) continue;
    next.coalitions[static_cast<std::size_t>(touched.pu())] =
        build_coalition(model, touched.pu(), next.members_of(touched.pu()));
  }
  return next;
}

bool is_nash_stable(const GameModel& model, const CoalitionStructure& structure,
                    double tol) {
  const auto actions = action_set(model);
  for (int su = 0; su < model.num_su(); ++su) {
    const Action current = structure.assignment[static_cast<std::size_t>(su)];
    const double here = repercussion_utility(model, structure, su, current);
    for (Action a : actions) {
      if (repercussion_utility(model, structure, su, a) > here + tol) {
        return false;
      }
    }
  }
  return true;
}

std::string structure_to_string(const CoalitionStructure& structure) {
  json j;
  json assignment = json::array();
  for (Action a : structure.assignment) assignment.push_back(a.to_string());
  j["assignment"] = assignment;
  json coalitions = json::array();
  for (const Coalition& c : structure.coalitions) {
    json record;
    record["pu"] = c.pu;
    record["order"] = c.order;
    record["unused"] = c.unused;
    record["times"] = c.times;
    record["rate"] = c.rate;
    record["demand"] = c.demand;
    record["alpha"] = c.alpha;
    record["value"] = coalition_value(c);
    coalitions.push_back(record);
  }
  j["coalitions"] = coalitions;
  j["welfare"] = welfare(structure);
  return j.dump(2) + "\n";
}

CoalitionStructure structure_from_string(const GameModel& model,
                                         std::string_view text) {
  try {
    const json j = json::parse(text);
    std::vector<Action> assignment;
    for (const json& a : j.at("assignment")) {
      assignment.push_back(Action::parse(a.get<std::string>()));
    }
    return make_structure(model, std::move(assignment));
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("malformed structure file: ") + e.what());
  }
}

}  // namespace coalradio
