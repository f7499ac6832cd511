// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <deque>

#include "banach/model.hpp"

namespace banach {

struct LbfgsOptions {
  int max_iter = 500;
  int history = 10;
  double gtol = 1e-10;
  double ftol = 1e-14;
  double max_step = 20.0;  // cap on the infinity norm of a single step
};

struct MinimizeResult {
  Vec x;
  double f = kInf;
  int iterations = 0;
  bool converged = false;
};

namespace detail {
inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double inf_norm(const Vec& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}
}  // namespace detail

/// Limited-memory BFGS with Armijo backtracking. `fg(x, grad)` returns the
/// objective and writes its gradient; non-finite values are treated as
/// infeasible and trigger backtracking.
template <class Fn>
MinimizeResult lbfgs_minimize(Fn&& fg, Vec x, const LbfgsOptions& opt) {
  using detail::dot;
  const std::size_t n = x.size();
  MinimizeResult res;
  Vec g(n);
  double f = fg(x, g);
  res.x = x;
  res.f = f;
  if (n == 0 || !std::isfinite(f)) {
    res.converged = n == 0;
    return res;
  }
  std::deque<Vec> S, Y;
  std::deque<double> R;
  int flat = 0;
  Vec d(n), xn(n), gn(n);
  for (int it = 0; it < opt.max_iter; ++it) {
    res.iterations = it + 1;
    if (detail::inf_norm(g) <= opt.gtol) {
      res.converged = true;
      break;
    }
    // two-loop recursion
    d = g;
    std::vector<double> alpha(S.size());
    for (std::size_t k = S.size(); k-- > 0;) {
      alpha[k] = R[k] * dot(S[k], d);
      for (std::size_t i = 0; i < n; ++i) d[i] -= alpha[k] * Y[k][i];
    }
    if (!S.empty()) {
      const double gamma = dot(S.back(), Y.back()) / dot(Y.back(), Y.back());
      for (double& v : d) v *= gamma;
    } else {
      const double gi = detail::inf_norm(g);
      for (double& v : d) v /= std::max(gi, 1.0);
    }
    for (std::size_t k = 0; k < S.size(); ++k) {
      const double beta = R[k] * dot(Y[k], d);
      for (std::size_t i = 0; i < n; ++i) d[i] += (alpha[k] - beta) * S[k][i];
    }
    for (double& v : d) v = -v;
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      S.clear();
      Y.clear();
      R.clear();
      const double gi = detail::inf_norm(g);
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i] / std::max(gi, 1.0);
      slope = dot(g, d);
    }
    const double dn = detail::inf_norm(d);
    if (dn > opt.max_step) {
      for (double& v : d) v *= opt.max_step / dn;
      slope *= opt.max_step / dn;
    }
    double step = 1.0;
    double fn = kInf;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + step * d[i];
      fn = fg(xn, gn);
      if (std::isfinite(fn) && fn <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!S.empty()) {
        S.clear();
        Y.clear();
        R.clear();
        continue;
      }
      res.converged = detail::inf_norm(g) <= 1e-6;
      break;
    }
    Vec s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = gn[i] - g[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      S.push_back(s);
      Y.push_back(y);
      R.push_back(1.0 / sy);
      if (static_cast<int>(S.size()) > opt.history) {
        S.pop_front();
        Y.pop_front();
        R.pop_front();
      }
    }
    const double df = f - fn;
    x.swap(xn);
    g.swap(gn);
    f = fn;
    if (df <= opt.ftol * (1.0 + std::abs(f))) {
      if (++flat >= 5) {
        res.converged = true;
        break;
      }
    } else {
      flat = 0;
    }
  }
  res.x = x;
  res.f = f;
  return res;
}

}  // namespace banach
