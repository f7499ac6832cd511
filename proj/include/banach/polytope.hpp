// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "banach/model.hpp"

namespace banach {

namespace detail {

/// Solves the square system a x = b in place; false when singular.
inline bool solve_dense(std::vector<Vec> a, Vec b, Vec& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-12) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c][k] * x[k];
    x[c] = s / a[c][c];
  }
  return true;
}

template <class F>
void for_each_combination(std::size_t total, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > total) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Maximal vertices of {x >= 0 : <r, x> <= 1 for every row r}.
///
/// Every monotone convex function on the positive part of the polytope attains
/// its maximum at one of the returned points.
inline std::vector<Vec> polytope_vertices(const std::vector<Vec>& rows, std::size_t n) {
  const std::size_t m = rows.size();
  std::vector<Vec> verts;
  detail::for_each_combination(m + n, n, [&](const std::vector<std::size_t>& act) {
    std::vector<Vec> a(n, Vec(n, 0.0));
    Vec b(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      if (act[k] < m) {
        a[k] = rows[act[k]];
        b[k] = 1.0;
      } else {
        a[k][act[k] - m] = 1.0;
      }
    }
    Vec x;
    if (!detail::solve_dense(a, b, x)) return;
    for (double& v : x) {
      if (v < -1e-10) return;
      v = std::max(v, 0.0);
    }
    for (const auto& r : rows) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += r[i] * x[i];
      if (s > 1.0 + 1e-10) return;
    }
    bool nonzero = false;
    for (double v : x) nonzero = nonzero || v > 0.0;
    if (!nonzero) return;
    for (const auto& v : verts) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(v[i] - x[i]));
      if (d < 1e-10) return;
    }
    verts.push_back(x);
  });
  std::vector<Vec> maximal;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < verts.size() && !dominated; ++b) {
      if (a == b) continue;
      bool ge = true;
      for (std::size_t i = 0; i < n; ++i) ge = ge && verts[b][i] >= verts[a][i] - 1e-12;
      dominated = ge;
    }
    if (!dominated) maximal.push_back(verts[a]);
  }
  return maximal;
}

}  // namespace banach
