// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "banach/norms.hpp"
#include "banach/report.hpp"

namespace banach {

namespace detail {
inline Vec random_point(std::mt19937_64& rng, std::size_t n, bool allow_zeros = true) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  Vec f(n);
  bool any = false;
  while (!any) {
    for (double& v : f) {
      v = std::exp(nd(rng)) * (ud(rng) < 0.5 ? -1.0 : 1.0);
      if (allow_zeros && ud(rng) < 0.2) v = 0.0;
      any = any || v != 0.0;
    }
  }
  return f;
}
}  // namespace detail

/// Samples homogeneity, the triangle inequality and monotonicity of ||.||_E.
inline CheckReport validate_norm_axioms(const Space& E, const WeightedModel& model, const SolverConfig& cfg = {}) {
  CheckReport rep;
  rep.check_id = "axioms:" + describe(E);
  rep.tolerance = cfg.tol;
  ReportTimer timer(rep);
  check_dimensions(E, model);
  const std::size_t n = model.n();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  auto N = [&](const Vec& f) { return norm_eval(E, f, model, cfg).value; };

  std::vector<std::pair<Vec, Vec>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec a(n, 0.0), b(n, 0.0);
      a[i] = 1.0;
      b[j] = 1.0;
      pairs.emplace_back(a, b);
    }
  while (pairs.size() < static_cast<std::size_t>(cfg.samples))
    pairs.emplace_back(detail::random_point(rng, n), detail::random_point(rng, n));
  pairs.resize(static_cast<std::size_t>(cfg.samples));

  for (const auto& [f, g] : pairs) {
    const double nf = N(f), ng = N(g);
    const double lam = (ud(rng) - 0.5) * 8.0;
    Vec lf(n), s(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
      lf[i] = lam * f[i];
      s[i] = f[i] + g[i];
      m[i] = f[i] * ud(rng);  // |m| <= |f|
    }
    const double scale = std::max(nf + ng, 1e-300);
    const double nl = N(lf);
    rep.record(std::abs(nl - std::abs(lam) * nf) / std::max(std::abs(lam) * nf, 1e-300),
               "homogeneity " + format_point(f), std::abs(lam) * nf, nl);
    const double ns = N(s);
    rep.record(std::max(0.0, ns - nf - ng) / scale, "triangle " + format_point(f) + "+" + format_point(g), nf + ng,
               ns);
    const double nm = N(m);
    rep.record(std::max(0.0, nm - nf) / std::max(nf, 1e-300), "monotone " + format_point(m), nf, nm);
  }
  timer.stop();
  rep.finish();
  return rep;
}

/// Seeded points on the unit sphere of E, uniform over sign patterns.
inline std::vector<Vec> sample_unit_sphere(const Space& E, std::size_t count, std::uint64_t seed,
                                           const WeightedModel& model, const SolverConfig& cfg = {}) {
  if (count < 1) throw StructureError("count must be at least 1");
  check_dimensions(E, model);
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  while (out.size() < count) {
    Vec f = detail::random_point(rng, model.n(), false);
    const double nf = norm_eval(E, f, model, cfg).value;
    if (!(nf > 0.0) || !std::isfinite(nf)) continue;
    for (double& v : f) v /= nf;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace banach
