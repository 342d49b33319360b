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

#ifndef COALRADIO_GAME_HPP
#define COALRADIO_GAME_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "coalradio/coalition.hpp"
#include "coalradio/scenario.hpp"

namespace coalradio {

// What one SU does: assist a primary user, or stay out of every coalition.
class Action {
 public:
  constexpr Action() = default;
  static constexpr Action none() { return Action(); }
  static constexpr Action assist(int pu) { return Action(pu); }

  constexpr bool is_none() const { return pu_ < 0; }
  // Index of the assisted PU; -1 for none.
  constexpr int pu() const { return pu_; }

  friend constexpr auto operator<=>(const Action&, const Action&) = default;

  // "P<i>" or "none".
  std::string to_string() const;
  static Action parse(std::string_view text);

 private:
  constexpr explicit Action(int pu) : pu_(pu) {}
  int pu_ = -1;
};

// Everything the game needs from a scenario.
struct GameModel {
  CapacityTable table;
  std::vector<double> demands;

  int num_pu() const { return table.num_pu(); }
  int num_su() const { return table.num_su(); }
  bool valid_action(Action a) const { return a.is_none() || a.pu() < num_pu(); }
};

GameModel make_game(const Scenario& scenario);

// Assist(0), ..., Assist(P-1), None: the candidate set of one move.
std::vector<Action> action_set(const GameModel& model);

// Assignment of every SU plus the coalition each PU derives from it.
struct CoalitionStructure {
  std::vector<Action> assignment;
  std::vector<Coalition> coalitions;

  // Sorted SUs whose action is Assist(pu).
  std::vector<int> members_of(int pu) const;
};

// Throws InvalidParams when the assignment size or an action is invalid.
CoalitionStructure make_structure(const GameModel& model,
                                  std::vector<Action> assignment);

// Everybody on None.
CoalitionStructure empty_structure(const GameModel& model);

// Sum of coalition values.
double welfare(const CoalitionStructure& structure);

// u_su(C) minus the harm su does to its mates, where C is the target
// coalition with su in it. Equals V(C) - V(C \ {su}); None yields 0.
double repercussion_utility(const GameModel& model,
                            const CoalitionStructure& structure, int su,
                            Action target);

// Reassigns su; only the source and target coalitions are recomputed.
CoalitionStructure apply_move(const GameModel& model,
                              const CoalitionStructure& structure, int su,
                              Action target);

// No SU can raise its repercussion utility by more than tol alone.
bool is_nash_stable(const GameModel& model, const CoalitionStructure& structure,
                    double tol = 1e-12);

// JSON record of a structure: per-PU coalitions, assignment and welfare, with
// sorted keys so files diff cleanly.
std::string structure_to_string(const CoalitionStructure& structure);
// Reads the assignment back and rebuilds the coalitions from it.
CoalitionStructure structure_from_string(const GameModel& model,
                                         std::string_view text);

}  // namespace coalradio

#endif  // COALRADIO_GAME_HPP
