// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Sampled lower estimates of p-convexity and p-concavity constants, and the
// index brackets derived from them.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "banach/lbfgs.hpp"
#include "banach/norms.hpp"

namespace banach {

namespace detail {

// log of ||(sum |f_i|^p)^(1/p)||_E / (sum ||f_i||_E^p)^(1/p), flipped for concavity.
inline double tuple_log_ratio(const Space& E, const WeightedModel& model, const SolverConfig& cfg, double p,
                              std::size_t k, bool concave, const Vec& u, Vec* grad) {
  const std::size_t n = model.n();
  Vec s(n);
  std::vector<Vec> wts(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = p * u[i * n + j];
    s[j] = lse(t, grad ? &wts[j] : nullptr) / p;
  }
  const auto num = log_norm(E, model, s, cfg, grad != nullptr);
  Vec L(k);
  std::vector<Vec> gl(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec ui(u.begin() + static_cast<std::ptrdiff_t>(i * n), u.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    auto r = log_norm(E, model, ui, cfg, grad != nullptr);
    L[i] = p * r.value;
    gl[i] = std::move(r.grad);
  }
  Vec dw;
  const double den = lse(L, grad ? &dw : nullptr) / p;
  const double sign = concave ? -1.0 : 1.0;
  if (grad) {
    grad->assign(u.size(), 0.0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double a = wts[j].empty() ? 0.0 : num.grad[j] * wts[j][i];
        const double b = dw.empty() ? 0.0 : dw[i] * gl[i][j];
        (*grad)[i * n + j] = sign * (a - b);
      }
  }
  return sign * (num.value - den);
}

inline double best_tuple_ratio(const Space& E, const WeightedModel& model, double p, std::size_t k,
                               const SolverConfig& cfg, bool concave) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw StructureError("exponent must be finite and at least 1");
  if (k < 2) throw StructureError("tuple size must be at least 2");
  check_dimensions(E, model);
  const std::size_t n = model.n();
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> nd(0.0, 2.0);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  constexpr double kZero = -40.0;  // log of an entry treated as zero

  std::vector<Vec> cands;
  // disjoint unit vectors
  {
    Vec u(k * n, kZero);
    for (std::size_t i = 0; i < k; ++i) u[i * n + (i % n)] = 0.0;
    cands.push_back(u);
  }
  // disjoint blocks of coordinates
  for (int rep = 0; rep < 4; ++rep) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Vec u(k * n, kZero);
    for (std::size_t j = 0; j < n; ++j) u[(j % k) * n + perm[j]] = nd(rng) * 0.5;
    cands.push_back(u);
  }
  while (cands.size() < static_cast<std::size_t>(cfg.samples)) {
    Vec u(k * n);
    const double sparsity = ud(rng) * 0.6;
    for (double& v : u) v = ud(rng) < sparsity ? kZero : nd(rng);
    cands.push_back(u);
  }

  std::vector<std::pair<double, std::size_t>> scored;
  for (std::size_t c = 0; c < cands.size(); ++c)
    scored.emplace_back(tuple_log_ratio(E, model, cfg, p, k, concave, cands[c], nullptr), c);
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  double best = std::max(0.0, scored.front().first);  // equal tuples give ratio one

  LbfgsOptions opt;
  opt.max_iter = std::min(cfg.max_iter, 100);
  const std::size_t refine = std::min<std::size_t>(3, scored.size());
  for (std::size_t r = 0; r < refine; ++r) {
    auto fg = [&](const Vec& u, Vec& g) {
      const double v = tuple_log_ratio(E, model, cfg, p, k, concave, u, &g);
      for (double& e : g) e = -e;
      return -v;
    };
    const auto res = lbfgs_minimize(fg, cands[scored[r].second], opt);
    // re-evaluate without the gradient path so the reported value is a true ratio
    best = std::max(best, tuple_log_ratio(E, model, cfg, p, k, concave, res.x, nullptr));
  }
  return std::exp(best);
}

}  // namespace detail

/// Lower estimate of the p-convexity constant over k-tuples.
inline double convexity_constant(const Space& E, double p, std::size_t k, const WeightedModel& model,
                                 const SolverConfig& cfg = {}) {
  return detail::best_tuple_ratio(E, model, p, k, cfg, false);
}

/// Lower estimate of the p-concavity constant over k-tuples.
inline double concavity_constant(const Space& E, double p, std::size_t k, const WeightedModel& model,
                                 const SolverConfig& cfg = {}) {
  return detail::best_tuple_ratio(E, model, p, k, cfg, true);
}

struct IndexBracket {
  double lower = 1.0;  // estimate of sup{p : p-convex with constant one}
  double upper = kInf;  // estimate of inf{p : p-concave with constant one}
};

/// Sampled index estimates; exponents above 64 are reported as infinite.
inline IndexBracket index_estimate(const Space& E, const WeightedModel& model, const SolverConfig& cfg = {},
                                   std::size_t k = 3) {
  constexpr double kCap = 64.0;
  const double thr = 1.0 + cfg.tol;
  auto convex = [&](double p) { return convexity_constant(E, p, k, model, cfg) <= thr; };
  auto concave = [&](double p) { return concavity_constant(E, p, k, model, cfg) <= thr; };
  IndexBracket out;
  if (convex(kCap)) {
    out.lower = kInf;
  } else {
    double lo = 1.0, hi = kCap;
    for (int it = 0; it < 24; ++it) {
      const double mid = std::sqrt(lo * hi);
      (convex(mid) ? lo : hi) = mid;
    }
    out.lower = lo;
  }
  if (concave(1.0)) {
    out.upper = 1.0;
  } else if (!concave(kCap)) {
    out.upper = kInf;
  } else {
    double lo = 1.0, hi = kCap;
    for (int it = 0; it < 24; ++it) {
      const double mid = std::sqrt(lo * hi);
      (concave(mid) ? hi : lo) = mid;
    }
    out.upper = hi;
  }
  return out;
}

/// Throws StructureError when a p-concavification is applied to a space
/// whose sampled p-convexity constant exceeds one.
inline void validate_space(const Space& E, const WeightedModel& model, const SolverConfig& cfg = {}) {
  check_dimensions(E, model);
  std::visit(overloaded{
                 [&](const space::Concavify& s) {
                   validate_space(*s.of, model, cfg);
                   const double c = convexity_constant(*s.of, s.p, 3, model, cfg);
                   if (c > 1.0 + cfg.tol)
                     throw StructureError("concavification needs a " + format_exponent(s.p) +
                                          "-convex space with constant one; estimate " + std::to_string(c));
                 },
                 [&](const space::Scaled& s) { validate_space(*s.of, model, cfg); },
                 [&](const space::Associate& s) { validate_space(*s.of, model, cfg); },
                 [&](const space::Convexify& s) { validate_space(*s.of, model, cfg); },
                 [&](const auto& s) {
                   if constexpr (requires { s.E; }) {
                     validate_space(*s.E, model, cfg);
                     validate_space(*s.F, model, cfg);
                   }
                 },
             },
             E.node());
}

}  // namespace banach
