// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Norm evaluation: the public entry points and the exact special cases that
// bypass the generic program solver.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "banach/lp.hpp"
#include "banach/polytope.hpp"
#include "banach/program.hpp"

namespace banach {

/// Points whose solid convex hull is the positive part of the unit ball
/// (or of its convex hull), when a finite such set is known.
inline std::optional<std::vector<Vec>> ball_generators(const Space& E, const WeightedModel& model) {
  const std::size_t n = model.n();
  if (auto s = E.as<space::Lp>()) {
    auto sc = [&](std::size_t i) { return s->scale.empty() ? 1.0 : s->scale[i]; };
    if (s->p == 1.0) {
      std::vector<Vec> g;
      for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0.0);
        e[i] = 1.0 / (sc(i) * model.weight(i));
        g.push_back(std::move(e));
      }
      return g;
    }
    if (std::isinf(s->p)) {
      Vec e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = 1.0 / sc(i);
      return std::vector<Vec>{e};
    }
    return std::nullopt;
  }
  if (auto s = E.as<space::D>()) {
    if (s->p != 1.0) return std::nullopt;
    std::vector<Vec> g;
    double A = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      A += s->a[k];
      Vec e(n, 0.0);
      for (std::size_t j = 0; j <= k; ++j) e[j] = 1.0 / A;
      g.push_back(std::move(e));
    }
    return g;
  }
  if (auto s = E.as<space::G>()) {
    if (s->p != 1.0) return std::nullopt;
    std::vector<Vec> rows;
    double A = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      A += s->a[k];
      Vec r(n, 0.0);
      for (std::size_t j = 0; j <= k; ++j) r[j] = 1.0 / A;
      rows.push_back(std::move(r));
    }
    return polytope_vertices(rows, n);
  }
  if (auto s = E.as<space::Explicit>()) return polytope_vertices(s->norm.rows, n);
  if (auto s = E.as<space::Scaled>()) {
    auto g = ball_generators(*s->of, model);
    if (!g) return std::nullopt;
    for (auto& v : *g)
      for (std::size_t i = 0; i < n; ++i) v[i] /= s->s[i];
    return g;
  }
  auto pairwise = [&](const Space& a, const Space& b) -> std::optional<std::vector<Vec>> {
    auto ga = ball_generators(a, model);
    if (!ga) return std::nullopt;
    auto gb = ball_generators(b, model);
    if (!gb) return std::nullopt;
    std::vector<Vec> g;
    for (const auto& x : *ga)
      for (const auto& y : *gb) {
        Vec e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = x[i] * y[i];
        g.push_back(std::move(e));
      }
    return g;
  };
  if (auto s = E.as<space::Rho>()) return pairwise(*s->E, *s->F);
  if (auto s = E.as<space::Product>()) return pairwise(*s->E, *s->F);
  return std::nullopt;
}

namespace detail {

inline std::vector<std::size_t> finite_support(const Vec& z) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] > -kInf) s.push_back(i);
  return s;
}

inline Vec restrict(const Vec& v, const std::vector<std::size_t>& S) {
  Vec r(S.size());
  for (std::size_t k = 0; k < S.size(); ++k) r[k] = v[S[k]];
  return r;
}

inline double log_dot(const Vec& g, const Vec& z, const WeightedModel* model, Vec* grad) {
  // log sum g_i mu_i exp(z_i)
  Vec t(z.size(), -kInf);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (g[i] > 0.0 && z[i] > -kInf) t[i] = std::log(g[i]) + z[i] + (model ? std::log(model->weight(i)) : 0.0);
  return lse(t, grad);
}

/// sup over generators g_j of log ||g_j exp(z)||_F.
inline LogNormResult mult_by_generators(const std::vector<Vec>& gens, const Space& F, const WeightedModel& model,
                                        const Vec& z, const SolverConfig& cfg, bool want_grad) {
  LogNormResult best;
  best.grad.assign(z.size(), 0.0);
  for (const auto& g : gens) {
    Vec zz(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zz[i] = g[i] > 0.0 ? z[i] + std::log(g[i]) : -kInf;
    auto r = log_norm(F, model, zz, cfg, want_grad);
    if (r.value > best.value) best = std::move(r);
  }
  if (best.grad.size() != z.size()) best.grad.assign(z.size(), 0.0);
  return best;
}

inline LogNormResult associate_by_generators(const std::vector<Vec>& gens, const WeightedModel& model, const Vec& z,
                                             bool want_grad) {
  LogNormResult best;
  best.grad.assign(z.size(), 0.0);
  for (const auto& g : gens) {
    Vec w;
    const double v = log_dot(g, z, &model, want_grad ? &w : nullptr);
    if (v > best.value) {
      best.value = v;
      if (want_grad) best.grad = w;
    }
  }
  return best;
}

inline LogNormResult solve_program(const Space& E, const WeightedModel& model, const Vec& z,
                                   const std::vector<std::size_t>& S, const SolverConfig& cfg, Vec* blocks = nullptr) {
  const Program P = compile(E, model, S, cfg);
  const auto sol = solve(P, restrict(z, S));
  LogNormResult r;
  r.value = sol.value;
  r.confident = sol.confident;
  r.grad.assign(z.size(), 0.0);
  for (std::size_t k = 0; k < S.size(); ++k) r.grad[S[k]] = sol.input_grad[k];
  if (blocks) *blocks = sol.x;
  return r;
}

struct Pricing {
  double sigma = 0.0;  // sup of <w, x> over the factorization ball
  Vec atom;            // a maximizer, inside the ball
  bool confident = true;
};

/// Support function of {gh : ||g||_E ||h||_F <= 1} at w >= 0 (counting pairing).
inline Pricing price(const Space& E, const Space& F, const WeightedModel& model, const Vec& w,
                     const SolverConfig& cfg) {
  const std::size_t n = model.n();
  Pricing out;
  auto ge = ball_generators(E, model);
  auto gf = ge ? ball_generators(F, model) : std::nullopt;
  if (ge && gf) {
    for (const auto& a : *ge)
      for (const auto& b : *gf) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
        if (s > out.sigma || out.atom.empty()) {
          out.sigma = s;
          out.atom.assign(n, 0.0);
          for (std::size_t i = 0; i < n; ++i) out.atom[i] = a[i] * b[i];
        }
      }
    return out;
  }
  // one side finite: sup over its generators h of ||w h / mu||_{X'}, with the
  // maximizing element of B_X read off the gradient of the associate norm
  const bool e_side = ge.has_value();
  const auto gens = e_side ? ge : ball_generators(F, model);
  if (gens && cfg.closed_forms) {
    const Space& X = e_side ? F : E;
    if (auto Xd = closed_form_associate(X, model)) {
      for (const auto& h : *gens) {
        Vec v(n, -kInf);
        for (std::size_t i = 0; i < n; ++i)
          if (w[i] * h[i] > 0.0) v[i] = std::log(w[i] * h[i] / model.weight(i));
        if (finite_support(v).empty()) continue;
        const auto r = log_norm(*Xd, model, v, cfg, true);
        const double N = std::exp(r.value);
        Vec g(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
          if (v[i] > -kInf) g[i] = N * r.grad[i] / (std::exp(v[i]) * model.weight(i));
        Vec lg(n);
        for (std::size_t i = 0; i < n; ++i) lg[i] = g[i] > 0.0 ? std::log(g[i]) : -kInf;
        const double ng = std::exp(log_norm(X, model, lg, cfg).value);
        if (!(ng > 0.0)) continue;
        double sg = 0.0;
        Vec atom(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
          atom[i] = g[i] / ng * h[i];
          sg += w[i] * atom[i];
        }
        if (sg > out.sigma || out.atom.empty()) {
          out.sigma = sg;
          out.atom = std::move(atom);
        }
      }
      if (!out.atom.empty()) return out;
    }
  }
  // sup_y log<mu e^y, w/mu> - min_v (L_E(v) + L_F(y - v))
  Vec z(n, -kInf);
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] > 0.0) z[i] = std::log(w[i] / model.weight(i));
  const auto S = finite_support(z);
  if (S.empty()) {
    out.atom.assign(n, 0.0);
    return out;
  }
  // laid out by hand so that block 0 is y and block 1 the factor log g
  Program P{model, S, Goal::Maximize, cfg, {}, {}};
  {
    const std::size_t m = S.size();
    Affine in = Affine::zero(m);
    in.input = 1.0;
    const std::size_t y = detail::add_block(P, BlockKind::Sup, Affine::zero(m));
    detail::emit(P, lp(1.0), Affine::block(y, m).plus(in), 1.0);
    const std::size_t v = detail::add_block(P, BlockKind::Inf, Affine::block(y, m, 0.5));
    detail::emit(P, E, Affine::block(v, m), -1.0);
    detail::emit(P, F, Affine::block(y, m).plus(Affine::block(v, m), -1.0), -1.0);
  }
  const auto sol = solve(P, restrict(z, S));
  const std::size_t m = S.size();
  Vec lg(n, -kInf), lh(n, -kInf);
  for (std::size_t k = 0; k < m; ++k) {
    const double y = sol.x[k];
    const double v = sol.x[m + k];
    lg[S[k]] = v;
    lh[S[k]] = y - v;
  }
  const double nE = log_norm(E, model, lg, cfg).value;
  const double nF = log_norm(F, model, lh, cfg).value;
  out.atom.assign(n, 0.0);
  for (std::size_t k = 0; k < m; ++k) out.atom[S[k]] = std::exp(lg[S[k]] + lh[S[k]] - nE - nF);
  for (std::size_t i = 0; i < n; ++i) out.sigma += w[i] * out.atom[i];
  out.confident = sol.confident;
  return out;
}

/// Gauge of the convex hull of the factorization ball, by column generation.
inline LogNormResult hull_log_norm(const space::Product& pr, const WeightedModel& model, const Vec& z,
                                   const SolverConfig& cfg, bool want_grad) {
  const std::size_t n = model.n();
  const auto S = finite_support(z);
  const Space R = rho(*pr.E, *pr.F);
  LogNormResult rr = solve_program(R, model, z, S, cfg);
  const double r = std::exp(rr.value);
  Vec f(n, 0.0);
  for (std::size_t i : S) f[i] = std::exp(z[i]);

  // the factorization gradient is a dual certificate when it prices at most 1
  Vec w(n, 0.0);
  for (std::size_t i : S) w[i] = r * rr.grad[i] / f[i];
  Pricing pz = price(*pr.E, *pr.F, model, w, cfg);
  if (pz.sigma <= 1.0 + 0.1 * cfg.tol) {
    rr.confident = rr.confident && pz.confident;
    return rr;
  }

  const std::size_t m = S.size();
  std::vector<Vec> atoms;
  for (std::size_t k = 0; k < m; ++k) {
    Vec e(n, -kInf);
    e[S[k]] = 0.0;
    const double ne = log_norm(*pr.E, model, e, cfg).value + log_norm(*pr.F, model, e, cfg).value;
    Vec a(m, 0.0);
    a[k] = std::exp(-ne);
    atoms.push_back(std::move(a));
  }
  {
    Vec a(m);
    for (std::size_t k = 0; k < m; ++k) a[k] = f[S[k]] / r;
    atoms.push_back(std::move(a));
  }
  atoms.push_back(restrict(pz.atom, S));

  const Vec c = restrict(f, S);
  LpSolution lp_sol;
  bool confident = rr.confident && pz.confident;
  for (int it = 0; it < 4 * cfg.max_iter; ++it) {
    lp_sol = solve_packing_lp(c, atoms);
    Vec wf(n, 0.0);
    for (std::size_t k = 0; k < m; ++k) wf[S[k]] = lp_sol.w[k];
    Pricing p = price(*pr.E, *pr.F, model, wf, cfg);
    confident = confident && p.confident;
    if (p.sigma <= 1.0 + 1e-9 || lp_sol.value <= (lp_sol.value / p.sigma) * (1.0 + 0.01 * cfg.tol)) break;
    atoms.push_back(restrict(p.atom, S));
  }
  LogNormResult out;
  out.value = std::log(lp_sol.value);
  out.confident = confident;
  out.grad.assign(n, 0.0);
  if (want_grad)
    for (std::size_t k = 0; k < m; ++k) out.grad[S[k]] = c[k] * lp_sol.w[k] / lp_sol.value;
  return out;
}

}  // namespace detail

inline LogNormResult log_norm(const Space& E, const WeightedModel& model, const Vec& z, const SolverConfig& cfg,
                              bool want_grad) {
  const auto S = detail::finite_support(z);
  if (S.empty()) {
    LogNormResult r;
    r.grad.assign(z.size(), 0.0);
    return r;
  }
  if (auto pr = E.as<space::Product>()) return detail::hull_log_norm(*pr, model, z, cfg, want_grad);
  if (auto s = E.as<space::Mult>()) {
    if (cfg.closed_forms)
      if (auto c = closed_form_mult(*s->E, *s->F, model)) return log_norm(*c, model, z, cfg, want_grad);
    if (auto g = ball_generators(*s->E, model)) return detail::mult_by_generators(*g, *s->F, model, z, cfg, want_grad);
  }
  if (auto s = E.as<space::Associate>()) {
    const bool closed = cfg.closed_forms && closed_form_associate(*s->of, model).has_value();
    if (!closed)
      if (auto g = ball_generators(*s->of, model)) return detail::associate_by_generators(*g, model, z, want_grad);
  }
  return detail::solve_program(E, model, z, S, cfg);
}

namespace detail {
inline Vec log_abs(const Vec& f) {
  Vec z(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) z[i] = f[i] != 0.0 ? std::log(std::abs(f[i])) : -kInf;
  return z;
}
inline void check_input(const Space& E, const WeightedModel& model, const Vec& f) {
  model.check_dim(f.size());
  check_dimensions(E, model);
  for (double v : f)
    if (!std::isfinite(v)) throw StructureError("vector entries must be finite");
}
}  // namespace detail

/// ||f||_E.
inline Estimate norm_eval(const Space& E, const Vec& f, const WeightedModel& model, const SolverConfig& cfg = {}) {
  detail::check_input(E, model, f);
  const auto r = log_norm(E, model, detail::log_abs(f), cfg);
  return {std::exp(r.value), r.confident};
}

/// ||y||_{E'} for the pairing <f,g> = sum f_i g_i mu_i.
inline Estimate dual_norm(const Space& E, const Vec& y, const WeightedModel& model, const SolverConfig& cfg = {}) {
  return norm_eval(associate(E), y, model, cfg);
}

/// Operator norm of multiplication by g from E to F.
inline Estimate mult_norm(const Space& E, const Space& F, const Vec& g, const WeightedModel& model,
                          const SolverConfig& cfg = {}) {
  return norm_eval(mult(E, F), g, model, cfg);
}

/// Gauge of the convex hull of the pointwise-product ball (the product norm).
inline Estimate product_norm(const Space& E, const Space& F, const Vec& f, const WeightedModel& model,
                             const SolverConfig& cfg = {}) {
  return norm_eval(product(E, F), f, model, cfg);
}

struct Factorization {
  Vec g, h;  // |f| = g h
  double value = 0.0;  // ||g||_E ||h||_F
  bool confident = true;
};

/// inf ||g||_E ||h||_F over |f| = g h, with a minimizing pair.
inline Factorization rho_product(const Space& E, const Space& F, const Vec& f, const WeightedModel& model,
                                 const SolverConfig& cfg = {}) {
  const Space R = rho(E, F);
  detail::check_input(R, model, f);
  const std::size_t n = model.n();
  const Vec z = detail::log_abs(f);
  const auto S = detail::finite_support(z);
  Factorization out;
  out.g.assign(n, 0.0);
  out.h.assign(n, 0.0);
  if (S.empty()) return out;
  Vec blocks;
  const auto r = detail::solve_program(R, model, z, S, cfg, &blocks);
  const std::size_t m = S.size();
  Vec lg(n, -kInf);
  for (std::size_t k = 0; k < m; ++k) lg[S[k]] = blocks[k];
  // balance so that both factors carry the same norm
  Vec lh(n, -kInf);
  for (std::size_t i : S) lh[i] = z[i] - lg[i];
  const double nE = log_norm(E, model, lg, cfg).value;
  const double nF = log_norm(F, model, lh, cfg).value;
  const double shift = 0.5 * (nF - nE);
  for (std::size_t i : S) {
    out.g[i] = std::exp(lg[i] + shift);
    out.h[i] = std::exp(lh[i] - shift);
  }
  out.value = std::exp(nE + nF);
  out.confident = r.confident;
  return out;
}

}  // namespace banach
