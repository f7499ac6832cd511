// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Exhaustive grid evaluation of the implicit norms for small models. Used as
// an independent reference for the optimizing solvers; it only ever calls
// norm_eval on the member spaces themselves.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "banach/lp.hpp"
#include "banach/norms.hpp"

namespace banach {

enum class OracleKind { Dual, Mult, Rho, Product };

struct OracleResult {
  double value = 0.0;
  double error_bound = 0.0;  // absolute
};

namespace detail {

/// Calls fn on every grid point of the nonnegative unit sphere of l_inf:
/// one coordinate equal to 1, the rest on a uniform grid of [0,1].
inline void for_each_sphere_point(std::size_t n, int grid, const std::function<void(const Vec&)>& fn) {
  const double h = 1.0 / (grid - 1);
  Vec x(n);
  for (std::size_t face = 0; face < n; ++face) {
    std::vector<int> idx(n, 0);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) x[i] = i == face ? 1.0 : idx[i] * h;
      // points with another coordinate equal to 1 are visited from the lowest such face
      bool dup = false;
      for (std::size_t i = 0; i < face; ++i) dup = dup || idx[i] == grid - 1;
      if (!dup) fn(x);
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (k == face) continue;
        if (++idx[k] < grid) break;
        idx[k] = 0;
      }
      if (k == n) break;
    }
  }
}

inline double min_unit_norm(const Space& E, const WeightedModel& model, const SolverConfig& cfg) {
  double m = kInf;
  for (std::size_t i = 0; i < model.n(); ++i) {
    Vec e(model.n(), 0.0);
    e[i] = 1.0;
    m = std::min(m, norm_eval(E, e, model, cfg).value);
  }
  return m;
}

inline double ones_norm(const Space& E, const WeightedModel& model, const SolverConfig& cfg) {
  return norm_eval(E, Vec(model.n(), 1.0), model, cfg).value;
}

}  // namespace detail

/// Grid evaluation of the dual (F unused), multiplier, factorization or hull
/// norm at v. The reported bound covers the grid discretization only.
inline OracleResult brute_force_oracle(OracleKind kind, const Space& E, const Space& F, const Vec& v,
                                       const WeightedModel& model, const SolverConfig& cfg = {}) {
  const std::size_t n = model.n();
  if (n > 4) throw DimensionError("brute-force oracle supports at most 4 atoms");
  model.check_dim(v.size());
  const int G = cfg.grid;
  const double h = 1.0 / (G - 1);
  const Vec a = abs_of(v);
  auto N_E = [&](const Vec& x) { return norm_eval(E, x, model, cfg).value; };
  auto N_F = [&](const Vec& x) { return norm_eval(F, x, model, cfg).value; };
  OracleResult out;

  if (kind == OracleKind::Dual || kind == OracleKind::Mult) {
    double best = 0.0;
    detail::for_each_sphere_point(n, G, [&](const Vec& x) {
      double num;
      if (kind == OracleKind::Dual) {
        num = model.pairing(x, a);
      } else {
        Vec xg(n);
        for (std::size_t i = 0; i < n; ++i) xg[i] = x[i] * a[i];
        num = N_F(xg);
      }
      best = std::max(best, num / N_E(x));
    });
    const double lin = kind == OracleKind::Dual ? model.l1(a) : N_F(a);
    out.value = best;
    out.error_bound =
        0.5 * h * (lin + best * detail::ones_norm(E, model, cfg)) / detail::min_unit_norm(E, model, cfg);
    return out;
  }

  const auto S = support_indices(a);
  if (S.empty()) return out;
  const std::size_t m = S.size();

  if (kind == OracleKind::Rho) {
    auto value_at = [&](const Vec& u) {  // u over S, u[0] == 0
      Vec g(n, 0.0), hh(n, 0.0);
      for (std::size_t k = 0; k < m; ++k) {
        g[S[k]] = std::exp(u[k]);
        hh[S[k]] = a[S[k]] * std::exp(-u[k]);
      }
      return N_E(g) * N_F(hh);
    };
    Vec center(m, 0.0);
    double best = value_at(center);
    double R = 8.0, step = 2.0 * R;
    if (m > 1) {
      for (int level = 0; level < 7; ++level) {
        step = 2.0 * R / (G - 1);
        Vec u(m, 0.0), arg = center;
        std::vector<int> idx(m - 1, 0);
        while (true) {
          for (std::size_t k = 1; k < m; ++k) u[k] = center[k] - R + idx[k - 1] * step;
          const double val = value_at(u);
          if (val < best) {
            best = val;
            arg = u;
          }
          std::size_t k = 0;
          for (; k + 1 < m; ++k) {
            if (++idx[k] < G) break;
            idx[k] = 0;
          }
          if (k + 1 == m) break;
        }
        center = arg;
        R = 3.0 * step;
      }
    }
    out.value = best;
    // each log-norm is 1-Lipschitz in the sup-norm of log coordinates
    out.error_bound = m > 1 ? best * (1.0 - std::exp(-step)) : 0.0;
    return out;
  }

  // hull gauge over the products of normalized grid atoms
  const int Gp = n <= 3 ? G : std::min(G, 9);
  const double hp = 1.0 / (Gp - 1);
  std::vector<Vec> ae, af;
  detail::for_each_sphere_point(n, Gp, [&](const Vec& x) {
    const double ne = N_E(x), nf = N_F(x);
    Vec xe(m), xf(m);
    for (std::size_t k = 0; k < m; ++k) {
      xe[k] = x[S[k]] / ne;
      xf[k] = x[S[k]] / nf;
    }
    ae.push_back(std::move(xe));
    af.push_back(std::move(xf));
  });
  Vec c(m);
  for (std::size_t k = 0; k < m; ++k) c[k] = a[S[k]];
  std::vector<Vec> atoms;
  for (std::size_t k = 0; k < m; ++k) {
    Vec e(n, 0.0);
    e[S[k]] = 1.0;
    Vec r(m, 0.0);
    r[k] = 1.0 / (N_E(e) * N_F(e));
    atoms.push_back(std::move(r));
  }
  LpSolution sol;
  for (int it = 0; it < 500; ++it) {
    sol = solve_packing_lp(c, atoms);
    double sigma = 0.0;
    std::size_t bi = 0, bj = 0;
    Vec we(m);
    for (std::size_t i = 0; i < ae.size(); ++i) {
      for (std::size_t k = 0; k < m; ++k) we[k] = sol.w[k] * ae[i][k];
      for (std::size_t j = 0; j < af.size(); ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += we[k] * af[j][k];
        if (s > sigma) {
          sigma = s;
          bi = i;
          bj = j;
        }
      }
    }
    if (sigma <= 1.0 + 1e-9) break;
    Vec r(m);
    for (std::size_t k = 0; k < m; ++k) r[k] = ae[bi][k] * af[bj][k];
    atoms.push_back(std::move(r));
  }
  auto kappa = [&](const Space& X) {
    return detail::ones_norm(X, model, cfg) / detail::min_unit_norm(X, model, cfg);
  };
  const double delta = (1.0 + 0.5 * hp * kappa(E)) * (1.0 + 0.5 * hp * kappa(F)) - 1.0;
  out.value = sol.value;
  out.error_bound = sol.value * delta;
  return out;
}

}  // namespace banach
