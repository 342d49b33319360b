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

#ifndef COALRADIO_ORACLE_HPP
#define COALRADIO_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coalradio/coalition.hpp"
#include "coalradio/game.hpp"

namespace coalradio {

// Exhaustive solvers used as ground truth on small instances. Everything is
// enumerated in a fixed lexicographic order and ties keep the first
// candidate, so results are reproducible by index.

struct OracleBudget {
  std::uint64_t max_structures = 1'000'000;
  int max_permutation_size = 7;
};

struct BruteForceResult {
  CoalitionStructure structure;
  double welfare = 0.0;
  std::uint64_t evaluated = 0;
};

// Every assignment of SUs to action_set(), in lexicographic order of action
// indices. Coalition values are memoized per (PU, member set); the reported
// welfare is recomputed on the winning structure. Throws BudgetExceeded when
// (|P| + 1)^|S| > max_structures.
BruteForceResult brute_force_structure(const GameModel& model,
                                       const OracleBudget& budget = {});

struct PermutationResult {
  std::vector<int> order;
  TimeSolution times;  // LP optimum for `order`
  double rate = 0.0;
};

// Maximum LP rate over every subset of the members and every ordering of the
// subset (the empty subset is direct transmission). Rates within
// kStructuralTol count as ties; a tie goes to the candidate whose equal-rate
// allocation is optimal with more relays, then to the earlier one. Throws
// BudgetExceeded above max_permutation_size members.
PermutationResult best_permutation(const CapacityTable& table, int pu,
                                   std::span<const int> members,
                                   const OracleBudget& budget = {});

// An ordering of all members whose LP optimum gives every slot positive time
// (more than kStructuralTol), if one exists.
std::optional<std::vector<int>> full_support_order(
    const CapacityTable& table, int pu, std::span<const int> members,
    const OracleBudget& budget = {});

struct OrderGap {
  double ratio = 1.0;
  std::vector<int> best_order;
  std::vector<int> worst_order;
  double best_rate = 0.0;
  double worst_rate = 0.0;
  int pu = 0;
  CapacityTable instance;
};

// Best over worst LP rate across all orderings of the full member set.
OrderGap order_gap(const CapacityTable& table, int pu,
                   std::span<const int> members,
                   const OracleBudget& budget = {});

// Samples `trials` tables with one PU and num_relays SUs, every capacity
// uniform on [0.1, 10], and keeps the largest order_gap ratio.
OrderGap find_order_gap(std::uint64_t seed, int num_relays, int trials,
                        const OracleBudget& budget = {});

// Replayable JSON witness: the instance as a raw scenario plus both orders
// and their rates.
std::string witness_to_string(const OrderGap& gap);

}  // namespace coalradio

#endif  // COALRADIO_ORACLE_HPP
