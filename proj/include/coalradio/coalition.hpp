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

#ifndef COALRADIO_COALITION_HPP
#define COALRADIO_COALITION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "coalradio/scenario.hpp"

namespace coalradio {

// Structural comparisons (activity of a relay, equality of rates).
inline constexpr double kStructuralTol = 1e-8;

// Capacity matrix of one ordered coalition. Row a is the transmitter of slot
// a (row 0 the base station, row k the k-th relay); column b is the receiver
// decoding at the end of slot b (column k-1 the k-th relay, the last column
// the PU). Only entries with a <= b are defined; the rest read as zero.
class OrderedCapacityMatrix {
 public:
  OrderedCapacityMatrix() = default;
  explicit OrderedCapacityMatrix(std::size_t size);

  // rows[a] lists the defined entries of row a, i.e. columns a..size-1.
  static OrderedCapacityMatrix from_upper_rows(
      const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return size_; }
  double operator()(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, double value);

 private:
  std::size_t size_ = 0;
  std::vector<double> data_;
};

// A time allocation over the slots of one coalition together with the rate
// it achieves.
struct TimeSolution {
  std::vector<double> times;
  double rate = 0.0;
};

// One PU coalition after relay ordering. Relays in `order` transmit in slots
// 1..C (slot 0 belongs to the base station); relays in `unused` stay silent.
struct Coalition {
  int pu = 0;
  std::vector<int> order;
  std::vector<double> times;
  std::vector<int> unused;
  // L(B, s) for each relay of `order`, used by the SU transmission phase.
  std::vector<double> base_links;
  double rate = 0.0;
  double demand = 0.0;
  double alpha = 1.0;

  std::size_t num_members() const { return order.size() + unused.size(); }
  bool contains(int su) const;
  // Sorted union of order and unused.
  std::vector<int> members() const;
};

// Throws MissingLink when the table lacks a needed capacity and
// InvalidParams for repeated or unknown relays.
OrderedCapacityMatrix build_matrix(const CapacityTable& table, int pu,
                                   std::span<const int> order);

// Cumulative mutual information at every receiver: component k is
// sum_j t_j L(j, k). Throws DimensionMismatch.
std::vector<double> rates(const OrderedCapacityMatrix& matrix,
                          std::span<const double> times);

// Minimum component of rates().
double coalition_rate(const OrderedCapacityMatrix& matrix,
                      std::span<const double> times);

// Equal-rate allocation: forward substitution of t'L = K 1', normalized to
// sum one, with rate K. It is the optimum for this order exactly when the
// optimum uses every slot. Throws SingularMatrix on a zero diagonal.
TimeSolution full_support_times(const OrderedCapacityMatrix& matrix);

// True when the equal-rate allocation is strictly positive and optimal for
// this order (the dual of the time LP, obtained by back substitution, is
// non-negative).
bool full_support_is_optimal(const OrderedCapacityMatrix& matrix);

// max R s.t. t >= 0, sum t = 1, R <= (t'L)_k for every k. Handles orders in
// which some relays should stay silent.
TimeSolution solve_times_lp(const OrderedCapacityMatrix& matrix);

// Greedy relay ordering. Starting from the base station, the next relay is
// the one that needs the least transmit time from the current transmitter to
// catch up with the common decoding target (ties go to the lowest SU index).
// Growth stops once the PU would decode first; the relays left over are
// unused. Final times are the equal-rate allocation of the active chain, so
// every active slot is strictly positive. alpha = min(1, demand / rate).
//
// The chain is not guaranteed to beat direct transmission: a relay that
// decodes quickly can still be a poor forwarder (see the Braess instance).
Coalition order_relays(const CapacityTable& table, int pu,
                       std::span<const int> members, double demand);

// (1 - alpha) t_k L(B, k) for an active relay, 0 for an unused one. Throws
// NotMember.
double member_utility(const Coalition& coalition, int su);

double coalition_value(const Coalition& coalition);

}  // namespace coalradio

#endif  // COALRADIO_COALITION_HPP
