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

#ifndef COALRADIO_SIMPLEX_HPP
#define COALRADIO_SIMPLEX_HPP

#include <cstddef>
#include <vector>

namespace coalradio {

// maximize c'y  subject to  A y <= b,  y >= 0, with b >= 0 so the slack
// basis is feasible and no phase one is needed. Dense tableau, Bland's rule.
struct PackingLp {
  std::vector<std::vector<double>> a;  // m rows of n coefficients
  std::vector<double> b;               // m, non-negative
  std::vector<double> c;               // n
};

struct PackingLpSolution {
  std::vector<double> y;       // primal optimum, size n
  std::vector<double> prices;  // dual optimum (one per row), size m
  double objective = 0.0;
  int iterations = 0;
};

// Throws DimensionMismatch for ragged input, InvalidParams for negative b,
// NumericalFailure for an unbounded problem or when the iteration cap is hit.
PackingLpSolution solve_packing_lp(const PackingLp& lp, int max_iterations);

}  // namespace coalradio

#endif  // COALRADIO_SIMPLEX_HPP
