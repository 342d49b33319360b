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

#include "coalradio/simplex.hpp"

#include <cmath>

#include "coalradio/errors.hpp"

namespace coalradio {
namespace {

constexpr double kPivotEps = 1e-12;

}  // namespace

PackingLpSolution solve_packing_lp(const PackingLp& lp, int max_iterations) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw DimensionMismatch("packing LP: |b| != rows(A)");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw DimensionMismatch("packing LP: ragged A");
  }
  for (double bi : lp.b) {
    if (!(bi >= 0.0)) throw InvalidParams("packing LP: b must be non-negative");
  }

  // Columns 0..n-1 structural, n..n+m-1 slacks, last column the rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<double>> tab(m, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = lp.a[i][j];
    tab[i][n + i] = 1.0;
    tab[i][width - 1] = lp.b[i];
    basis[i] = n + i;
  }
  // Reduced costs; the last entry holds minus the objective value.
  std::vector<double> reduced(width, 0.0);
  for (std::size_t j = 0; j < n; ++j) reduced[j] = lp.c[j];

  PackingLpSolution sol;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (reduced[j] > kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    if (sol.iterations >= max_iterations) {
      throw NumericalFailure("simplex hit its iteration cap");
    }
    ++sol.iterations;

    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double coef = tab[i][enter];
      if (coef <= kPivotEps) continue;
      const double ratio = tab[i][width - 1] / coef;
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw NumericalFailure("packing LP is unbounded");

    auto& prow = tab[leave];
    const double pivot = prow[enter];
    for (double& v : prow) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = tab[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= f * prow[j];
    }
    const double f = reduced[enter];
    for (std::size_t j = 0; j < width; ++j) reduced[j] -= f * prow[j];
    basis[leave] = enter;
  }

  sol.y.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.y[basis[i]] = tab[i][width - 1];
  }
  sol.prices.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.prices[i] = -reduced[n + i];
  sol.objective = -reduced[width - 1];
  return sol;
}

}  // namespace coalradio
