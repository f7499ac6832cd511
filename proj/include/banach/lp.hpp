// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <vector>

#include "banach/model.hpp"

namespace banach {

struct LpSolution {
  Vec w;
  double value = 0.0;
  bool bounded = true;
};

/// Solves max <c, w> subject to <a_k, w> <= 1 for every row a_k and w >= 0,
/// with a dense tableau simplex (Bland's rule, so it cannot cycle).
inline LpSolution solve_packing_lp(const Vec& c, const std::vector<Vec>& rows) {
  const std::size_t n = c.size();
  const std::size_t m = rows.size();
  const std::size_t cols = n + m + 1;  // structural, slack, rhs
  std::vector<Vec> t(m + 1, Vec(cols, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t[r][j] = rows[r][j];
    t[r][n + r] = 1.0;
    t[r][cols - 1] = 1.0;
    basis[r] = n + r;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
  constexpr double eps = 1e-12;
  LpSolution sol;
  for (int iter = 0; iter < 100000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    double best = kInf;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] > eps) {
        const double ratio = t[r][cols - 1] / t[r][enter];
        if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && leave < m && basis[r] < basis[leave])) {
          best = ratio;
          leave = r;
        }
      }
    }
    if (leave == m) {
      sol.bounded = false;
      sol.value = kInf;
      return sol;
    }
    const double piv = t[leave][enter];
    for (double& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = t[r][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  sol.w.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) sol.w[basis[r]] = t[r][cols - 1];
  sol.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.value += c[j] * sol.w[j];
  return sol;
}

}  // namespace banach
