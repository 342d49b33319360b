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

#ifndef COALRADIO_TESTS_FIXTURES_HPP
#define COALRADIO_TESTS_FIXTURES_HPP

#include <vector>

#include "coalradio/coalition.hpp"
#include "coalradio/game.hpp"
#include "coalradio/rng.hpp"
#include "coalradio/scenario.hpp"

namespace coalradio::testing {

// One PU, three SUs: the textbook instance where adding relay S0 to {S1, S2}
// lowers the coalition rate from 2 to 20/11.
inline CapacityTable braess_table() {
  CapacityTable t(1, 3);
  const NodeId b = NodeId::base_station();
  const NodeId p = NodeId::primary(0);
  auto s = [](int i) { return NodeId::secondary(i); };
  t.set(b, s(0), 10);
  t.set(b, s(1), 6);
  t.set(b, s(2), 8);
  t.set(b, p, 2);
  t.set(s(0), s(1), 4);
  t.set(s(0), s(2), 1);
  t.set(s(0), p, 1);
  t.set(s(1), s(0), 1);
  t.set(s(1), s(2), 1);
  t.set(s(1), p, 2);
  t.set(s(2), s(0), 1);
  t.set(s(2), s(1), 5);
  t.set(s(2), p, 2);
  return t;
}

inline Scenario raw_scenario(const CapacityTable& table,
                             std::vector<double> demands) {
  Scenario s;
  s.num_pu = table.num_pu();
  s.num_su = table.num_su();
  s.raw_capacities = table;
  s.demands = std::move(demands);
  return s;
}

// Every link a coalition can use, uniform on [lo, hi].
inline CapacityTable random_table(Rng& rng, int num_pu, int num_su,
                                  double lo = 0.1, double hi = 10.0) {
  CapacityTable t(num_pu, num_su);
  const NodeId b = NodeId::base_station();
  for (int p = 0; p < num_pu; ++p) {
    t.set(b, NodeId::primary(p), uniform_real(rng, lo, hi));
  }
  for (int s = 0; s < num_su; ++s) {
    t.set(b, NodeId::secondary(s), uniform_real(rng, lo, hi));
    for (int p = 0; p < num_pu; ++p) {
      t.set(NodeId::secondary(s), NodeId::primary(p),
            uniform_real(rng, lo, hi));
    }
    for (int r = 0; r < num_su; ++r) {
      if (r != s) {
        t.set(NodeId::secondary(s), NodeId::secondary(r),
              uniform_real(rng, lo, hi));
      }
    }
  }
  return t;
}

// Upper-triangular matrix of the given size with entries uniform on [lo, hi].
inline OrderedCapacityMatrix random_matrix(Rng& rng, std::size_t size,
                                           double lo = 0.1, double hi = 10.0) {
  OrderedCapacityMatrix m(size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      m.set(a, b, uniform_real(rng, lo, hi));
    }
  }
  return m;
}

inline GameModel geometric_game(int num_pu, int num_su, std::uint64_t seed) {
  return make_game(generate_scenario(num_pu, num_su, 10.0, seed));
}

}  // namespace coalradio::testing

#endif  // COALRADIO_TESTS_FIXTURES_HPP
