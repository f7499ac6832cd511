// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Closed-form lattice norms evaluated in log coordinates.
//
// Every kernel takes z = log|x| (entries may be -inf for zero coordinates)
// and returns log ||x||, optionally with the gradient d log||x|| / dz. For a
// lattice norm that gradient is nonnegative and sums to one. A positive
// smoothing temperature replaces each max by tau * logsumexp(. / tau), which
// keeps the kernel convex in z and within tau * log(count) of the exact value.

#pragma once

#include <algorithm>
#include <cmath>
#include <variant>
#include <vector>

#include "banach/model.hpp"
#include "banach/space.hpp"

namespace banach {

namespace detail {

inline double safe_log(double v) { return v > 0.0 ? std::log(v) : -kInf; }

/// log sum exp(v); fills w with the softmax weights when given.
inline double lse(std::span<const double> v, Vec* w = nullptr) {
  double m = -kInf;
  for (double x : v) m = std::max(m, x);
  if (w) w->assign(v.size(), 0.0);
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (double x : v) s += x == -kInf ? 0.0 : std::exp(x - m);
  if (w)
    for (std::size_t i = 0; i < v.size(); ++i) (*w)[i] = v[i] == -kInf ? 0.0 : std::exp(v[i] - m) / s;
  return m + std::log(s);
}

/// Smoothed max; exact max with a one-hot subgradient when tau == 0.
inline double smax(std::span<const double> v, double tau, Vec* w = nullptr) {
  if (tau > 0.0) {
    Vec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] == -kInf ? -kInf : v[i] / tau;
    const double r = lse(scaled, w);
    return r == -kInf ? -kInf : tau * r;
  }
  std::size_t best = 0;
  double m = -kInf;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > m) {
      m = v[i];
      best = i;
    }
  if (w) {
    w->assign(v.size(), 0.0);
    if (m > -kInf) (*w)[best] = 1.0;
  }
  return m;
}

}  // namespace detail

namespace leaf {

struct Lp {
  double p;
  Vec log_scale;
  Vec log_mu;
};
struct D {
  Vec log_a;
  double p;
};
struct G {
  Vec log_prefix;  // log A_k
  double p;
};
struct Rows {
  std::vector<Vec> log_rows;
};
struct Matrix {
  std::vector<Vec> log_T;
  double p;
  Vec log_mu;
};

}  // namespace leaf

using Leaf = std::variant<leaf::Lp, leaf::D, leaf::G, leaf::Rows, leaf::Matrix>;

inline bool is_leaf_space(const Space& E) {
  return E.is<space::Lp>() || E.is<space::D>() || E.is<space::G>() || E.is<space::Explicit>() ||
         E.is<space::MatrixDomain>();
}

inline Leaf make_leaf(const Space& E, const WeightedModel& model) {
  const std::size_t n = model.n();
  Vec log_mu(n);
  for (std::size_t i = 0; i < n; ++i) log_mu[i] = std::log(model.weight(i));
  if (auto s = E.as<space::Lp>()) {
    Vec ls(n, 0.0);
    if (!s->scale.empty())
      for (std::size_t i = 0; i < n; ++i) ls[i] = std::log(s->scale[i]);
    return leaf::Lp{s->p, std::move(ls), std::move(log_mu)};
  }
  if (auto s = E.as<space::D>()) {
    Vec la(n);
    for (std::size_t i = 0; i < n; ++i) la[i] = detail::safe_log(s->a[i]);
    return leaf::D{std::move(la), s->p};
  }
  if (auto s = E.as<space::G>()) {
    Vec lA(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += s->a[i];
      lA[i] = std::log(acc);
    }
    return leaf::G{std::move(lA), s->p};
  }
  if (auto s = E.as<space::Explicit>()) {
    std::vector<Vec> lr;
    for (const auto& r : s->norm.rows) {
      Vec l(n);
      for (std::size_t i = 0; i < n; ++i) l[i] = detail::safe_log(r[i]);
      lr.push_back(std::move(l));
    }
    return leaf::Rows{std::move(lr)};
  }
  if (auto s = E.as<space::MatrixDomain>()) {
    std::vector<Vec> lt(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lt[i][j] = detail::safe_log(s->T[i][j]);
    return leaf::Matrix{std::move(lt), s->p, std::move(log_mu)};
  }
  throw StructureError("not a closed-form leaf: " + describe(E));
}

/// Number of max operations a leaf smooths, for error accounting.
inline std::size_t leaf_max_width(const Leaf& l) {
  return std::visit(overloaded{
                        [](const leaf::Lp& s) -> std::size_t { return std::isinf(s.p) ? s.log_scale.size() : 1; },
                        [](const leaf::D& s) -> std::size_t { return s.log_a.size(); },
                        [](const leaf::G& s) -> std::size_t { return s.log_prefix.size(); },
                        [](const leaf::Rows& s) -> std::size_t { return s.log_rows.size(); },
                        [](const leaf::Matrix&) -> std::size_t { return 1; },
                    },
                    l);
}

inline bool leaf_is_smooth(const Leaf& l) { return leaf_max_width(l) <= 1; }

/// log ||exp(z)|| for a closed-form leaf; grad (if non-null) receives d/dz.
inline double leaf_log_norm(const Leaf& l, std::span<const double> z, double tau, Vec* grad) {
  const std::size_t n = z.size();
  if (grad) grad->assign(n, 0.0);
  return std::visit(
      overloaded{
          [&](const leaf::Lp& s) {
            Vec v(n), w;
            if (std::isinf(s.p)) {
              for (std::size_t i = 0; i < n; ++i) v[i] = z[i] == -kInf ? -kInf : s.log_scale[i] + z[i];
              const double r = detail::smax(v, tau, grad ? &w : nullptr);
              if (grad) *grad = w;
              return r;
            }
            for (std::size_t i = 0; i < n; ++i)
              v[i] = z[i] == -kInf ? -kInf : s.log_mu[i] + s.p * (s.log_scale[i] + z[i]);
            const double r = detail::lse(v, grad ? &w : nullptr);
            if (grad) *grad = w;
            return r == -kInf ? -kInf : r / s.p;
          },
          [&](const leaf::D& s) {
            // tail maxima T_k = max_{j >= k} z_j, then (1/p) log sum a_k exp(p T_k)
            std::vector<Vec> tw(n);
            Vec u(n, -kInf);
            for (std::size_t k = 0; k < n; ++k) {
              if (s.log_a[k] == -kInf) continue;
              const double t = detail::smax(z.subspan(k), tau, grad ? &tw[k] : nullptr);
              u[k] = t == -kInf ? -kInf : s.log_a[k] + s.p * t;
            }
            Vec w;
            const double r = detail::lse(u, grad ? &w : nullptr);
            if (grad)
              for (std::size_t k = 0; k < n; ++k) {
                if (w[k] == 0.0) continue;
                for (std::size_t j = 0; j < tw[k].size(); ++j) (*grad)[k + j] += w[k] * tw[k][j];
              }
            return r == -kInf ? -kInf : r / s.p;
          },
          [&](const leaf::G& s) {
            // V_k = (1/p)(log sum_{j<=k} exp(p z_j) - log A_k), then max_k V_k
            std::vector<Vec> iw(n);
            Vec v(n);
            Vec pz(n);
            for (std::size_t j = 0; j < n; ++j) pz[j] = z[j] == -kInf ? -kInf : s.p * z[j];
            for (std::size_t k = 0; k < n; ++k) {
              const double l = detail::lse(std::span<const double>(pz).first(k + 1), grad ? &iw[k] : nullptr);
              v[k] = l == -kInf ? -kInf : (l - s.log_prefix[k]) / s.p;
            }
            Vec w;
            const double r = detail::smax(v, tau, grad ? &w : nullptr);
            if (grad)
              for (std::size_t k = 0; k < n; ++k) {
                if (w[k] == 0.0) continue;
                for (std::size_t j = 0; j <= k; ++j) (*grad)[j] += w[k] * iw[k][j];
              }
            return r;
          },
          [&](const leaf::Rows& s) {
            const std::size_t m = s.log_rows.size();
            std::vector<Vec> iw(m);
            Vec v(m);
            Vec t(n);
            for (std::size_t r = 0; r < m; ++r) {
              for (std::size_t i = 0; i < n; ++i)
                t[i] = (z[i] == -kInf || s.log_rows[r][i] == -kInf) ? -kInf : s.log_rows[r][i] + z[i];
              v[r] = detail::lse(t, grad ? &iw[r] : nullptr);
            }
            Vec w;
            const double res = detail::smax(v, tau, grad ? &w : nullptr);
            if (grad)
              for (std::size_t r = 0; r < m; ++r) {
                if (w[r] == 0.0) continue;
                for (std::size_t i = 0; i < n; ++i) (*grad)[i] += w[r] * iw[r][i];
              }
            return res;
          },
          [&](const leaf::Matrix& s) {
            std::vector<Vec> iw(n);
            Vec y(n), t(n);
            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t j = 0; j < n; ++j)
                t[j] = (z[j] == -kInf || s.log_T[i][j] == -kInf) ? -kInf : s.log_T[i][j] + z[j];
              const double yi = detail::lse(t, grad ? &iw[i] : nullptr);
              y[i] = yi == -kInf ? -kInf : s.log_mu[i] + s.p * yi;
            }
            Vec w;
            const double r = detail::lse(y, grad ? &w : nullptr);
            if (grad)
              for (std::size_t i = 0; i < n; ++i) {
                if (w[i] == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) (*grad)[j] += w[i] * iw[i][j];
              }
            return r == -kInf ? -kInf : r / s.p;
          },
      },
      l);
}

}  // namespace banach
