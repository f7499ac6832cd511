// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Executable factorization and duality identities. Each check samples
// inputs, evaluates both sides with the solvers and reports the worst
// relative deviation together with offending inputs.

#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>

#include "banach/axioms.hpp"
#include "banach/constants.hpp"
#include "banach/norms.hpp"
#include "banach/report.hpp"
#include "banach/sequence.hpp"

namespace banach {

// ---------------------------------------------------------------- instances

inline WeightedModel random_model(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> ud(0.5, 2.0);
  Vec w(n);
  for (double& v : w) v = ud(rng);
  return WeightedModel(std::move(w));
}

/// Weighted L_p (p in {1, 1.5, 2, 3, inf}), d/g spaces with decreasing
/// weights, and Calderon combinations nested up to `depth` levels.
inline Space random_space(std::mt19937_64& rng, std::size_t n, int depth) {
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  if (depth > 0 && ud(rng) < 0.35) {
    Space a = random_space(rng, n, depth - 1);
    Space b = random_space(rng, n, depth - 1);
    return calderon(a, b, 0.2 + 0.6 * ud(rng));
  }
  if (ud(rng) < 0.25) {
    Vec a(n);
    double v = 1.0;
    for (double& x : a) {
      x = v;
      v *= 0.3 + 0.7 * ud(rng);
    }
    const double p = ud(rng) < 0.6 ? 1.0 : 2.0;
    return ud(rng) < 0.5 ? dspace(std::move(a), p) : gspace(std::move(a), p);
  }
  static constexpr double kExp[] = {1.0, 1.5, 2.0, 3.0, kInf};
  const double p = kExp[static_cast<std::size_t>(ud(rng) * 5.0) % 5];
  Vec s;
  if (ud(rng) < 0.5) {
    s.resize(n);
    for (double& x : s) x = 0.5 + 1.5 * ud(rng);
  }
  return lp(p, std::move(s));
}

namespace detail {

inline Vec random_positive(std::mt19937_64& rng, std::size_t n) {
  Vec f = random_point(rng, n);
  for (double& v : f) v = std::abs(v);
  return f;
}

inline Space mult_simplified(const Space& E, const Space& F, const WeightedModel& model) {
  if (auto c = closed_form_mult(E, F, model)) return *c;
  return mult(E, F);
}

inline SolverConfig numeric(SolverConfig cfg) {
  cfg.closed_forms = false;
  return cfg;
}

inline CheckReport make_report(std::string id, double tol) {
  CheckReport r;
  r.check_id = std::move(id);
  r.tolerance = tol;
  return r;
}

/// A report stating that a hypothesis of the identity is not met.
inline CheckReport hypothesis_failed(std::string id, double tol, const std::string& what, double estimate) {
  CheckReport r = make_report(std::move(id), tol);
  r.record(kInf, "hypothesis: " + what, 1.0, estimate);
  r.finish();
  return r;
}

inline int sample_count(const SolverConfig& cfg, int cap) { return std::max(1, std::min(cfg.samples, cap)); }

}  // namespace detail

// ------------------------------------------------------------------- checks

/// rho over E . E' equals the L_1(mu) norm, and rho obeys the triangle inequality.
inline CheckReport check_lozanovskii(const Space& E, const WeightedModel& model, const SolverConfig& cfg,
                                     int samples = 20) {
  auto rep = detail::make_report("lozanovskii:" + describe(E), cfg.tol);
  ReportTimer timer(rep);
  const Space Ed = associate_simplified(E, model);
  std::mt19937_64 rng(cfg.seed);
  const std::size_t n = model.n();
  for (int s = 0; s < samples; ++s) {
    const Vec f = detail::random_positive(rng, n);
    const double l1 = model.l1(f);
    const auto r = rho_product(E, Ed, f, model, cfg);
    rep.record(rel_dev(r.value, l1), format_point(f), l1, r.value);
  }
  for (int s = 0; s < std::min(samples, 3); ++s) {
    const Vec f = detail::random_positive(rng, n), g = detail::random_positive(rng, n);
    Vec fg(n);
    for (std::size_t i = 0; i < n; ++i) fg[i] = f[i] + g[i];
    const double a = rho_product(E, Ed, f, model, cfg).value, b = rho_product(E, Ed, g, model, cfg).value;
    const double c = rho_product(E, Ed, fg, model, cfg).value;
    rep.record(std::max(0.0, c - a - b) / (a + b), "triangle " + format_point(f) + "+" + format_point(g), a + b, c);
  }
  timer.stop();
  rep.finish();
  return rep;
}

/// (E.F)' = M(E,F') = M(F,E'); the left side is computed without rewriting.
inline CheckReport check_product_dual(const Space& E, const Space& F, const WeightedModel& model,
                                      const SolverConfig& cfg, int samples = 10) {
  auto rep = detail::make_report("product_dual:" + describe(E) + "," + describe(F), cfg.tol);
  ReportTimer timer(rep);
  const Space Ed = associate_simplified(E, model), Fd = associate_simplified(F, model);
  const auto nc = detail::numeric(cfg);
  std::mt19937_64 rng(cfg.seed + 1);
  for (int s = 0; s < samples; ++s) {
    const Vec w = detail::random_positive(rng, model.n());
    const double a = dual_norm(product(E, F), w, model, nc).value;
    const double b = mult_norm(E, Fd, w, model, cfg).value;
    const double c = mult_norm(F, Ed, w, model, cfg).value;
    const double dev = std::max({rel_dev(b, a), rel_dev(c, a), rel_dev(c, b)});
    rep.record(dev, format_point(w), a, rel_dev(b, a) >= rel_dev(c, a) ? b : c);
  }
  timer.stop();
  rep.finish();
  return rep;
}

/// The associate of a Calderon space is the Calderon space of the associates,
/// and the convexification special case. The left sides are computed
/// numerically, without closed-form rewriting.
inline CheckReport check_calderon_duality(const Space& E, const Space& F, double p, const WeightedModel& model,
                                          const SolverConfig& cfg, int samples = 10) {
  auto rep = detail::make_report("calderon:" + describe(E) + "," + describe(F) + ",p=" + format_exponent(p), cfg.tol);
  ReportTimer timer(rep);
  const double th = 1.0 / p;
  const auto nc = detail::numeric(cfg);
  const Space lhs = calderon(E, F, th);
  const Space rhs = calderon(associate_simplified(E, model), associate_simplified(F, model), th);
  const Space lhs2 = convexify(F, p);
  const Space rhs2 = product(convexify(associate_simplified(F, model), p), lp(conjugate_exponent(p)));
  std::mt19937_64 rng(cfg.seed + 2);
  for (int s = 0; s < samples; ++s) {
    const Vec w = detail::random_positive(rng, model.n());
    const double a = dual_norm(lhs, w, model, nc).value, b = norm_eval(rhs, w, model, cfg).value;
    rep.record(rel_dev(a, b), "interpolation " + format_point(w), b, a);
    const double c = dual_norm(lhs2, w, model, nc).value, d = norm_eval(rhs2, w, model, cfg).value;
    rep.record(rel_dev(c, d), "convexification " + format_point(w), d, c);
  }
  timer.stop();
  rep.finish();
  return rep;
}

/// F = M(E, E.F) when E.F is a product Banach function space.
inline CheckReport check_multiplier_recovery(const Space& E, const Space& F, const WeightedModel& model,
                                             const SolverConfig& cfg, int samples = 5) {
  const std::string id = "multiplier:" + describe(E) + "," + describe(F);
  const double c2 = convexity_constant(calderon(E, F, 0.5), 2.0, 3, model, cfg);
  if (c2 > 1.0 + cfg.tol) return detail::hypothesis_failed(id, cfg.tol, "E.F is not a product Banach space", c2);
  auto rep = detail::make_report(id, cfg.tol);
  ReportTimer timer(rep);
  std::mt19937_64 rng(cfg.seed + 3);
  for (int s = 0; s < samples; ++s) {
    const Vec g = detail::random_positive(rng, model.n());
    const double a = mult_norm(E, product(E, F), g, model, cfg).value;
    const double b = norm_eval(F, g, model, cfg).value;
    rep.record(rel_dev(a, b), format_point(g), b, a);
  }
  timer.stop();
  rep.finish();
  return rep;
}

/// ||.||_{E.G} <= C ||.||_{E.F} transfers to ||.||_G <= C ||.||_F.
inline CheckReport check_cancellation(const Space& E, const Space& F, const Space& G, const WeightedModel& model,
                                      const SolverConfig& cfg, int samples = 8) {
  const std::string id = "cancellation:" + describe(E) + "," + describe(F) + "," + describe(G);
  for (const Space* X : {&F, &G}) {
    const double c2 = convexity_constant(calderon(E, *X, 0.5), 2.0, 3, model, cfg);
    if (c2 > 1.0 + cfg.tol) return detail::hypothesis_failed(id, cfg.tol, "product is not a Banach space", c2);
  }
  auto rep = detail::make_report(id, cfg.tol);
  ReportTimer timer(rep);
  const std::size_t n = model.n();
  std::mt19937_64 rng(cfg.seed + 4);
  std::vector<Vec> probe{Vec(n, 1.0)};
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    probe.push_back(e);
  }
  for (int s = 0; s < samples; ++s) probe.push_back(detail::random_positive(rng, n));
  double C = 0.0;
  for (const auto& f : probe)
    C = std::max(C, product_norm(E, G, f, model, cfg).value / product_norm(E, F, f, model, cfg).value);
  for (int s = 0; s < samples; ++s) {
    const Vec f = detail::random_positive(rng, n);
    const double g = norm_eval(G, f, model, cfg).value, fv = norm_eval(F, f, model, cfg).value;
    rep.record(std::max(0.0, g / fv - C) / C, format_point(f), C * fv, g);
  }
  timer.stop();
  rep.finish();
  return rep;
}

/// For p-convex E with constant one: E.M(E,L_p) = L_p, M(M(E,L_p),L_p) = E,
/// and (E^p)' = M(E,L_p)^p.
inline std::vector<CheckReport> check_factor_lp(const Space& E, double p, const WeightedModel& model,
                                                const SolverConfig& cfg, int samples = 8) {
  const std::string id = "factor_lp:" + describe(E) + ",p=" + format_exponent(p);
  const double cp = convexity_constant(E, p, 3, model, cfg);
  if (cp > 1.0 + cfg.tol) return {detail::hypothesis_failed(id, cfg.tol, "E is not p-convex", cp)};
  const auto nc = detail::numeric(cfg);
  const Space Lp = lp(p);
  const Space ME = detail::mult_simplified(E, Lp, model);
  auto prod = detail::make_report(id + "/product", cfg.tol);
  auto rec = detail::make_report(id + "/recovery", cfg.tol);
  auto dual = detail::make_report(id + "/concavification", cfg.tol);
  std::mt19937_64 rng(cfg.seed + 5);
  for (int s = 0; s < samples; ++s) {
    {
      ReportTimer t(prod);
      const Vec f = detail::random_positive(rng, model.n());
      const double a = product_norm(E, ME, f, model, cfg).value, b = norm_eval(Lp, f, model, cfg).value;
      prod.record(rel_dev(a, b), format_point(f), b, a);
    }
    {
      ReportTimer t(rec);
      const Vec g = detail::random_positive(rng, model.n());
      const double a = mult_norm(ME, Lp, g, model, nc).value, b = norm_eval(E, g, model, cfg).value;
      rec.record(rel_dev(a, b), format_point(g), b, a);
    }
    {
      ReportTimer t(dual);
      const Vec y = detail::random_positive(rng, model.n());
      const double a = dual_norm(concavify(E, p), y, model, nc).value;
      const double b = norm_eval(concavify(ME, p), y, model, cfg).value;
      dual.record(rel_dev(a, b), format_point(y), b, a);
    }
  }
  for (auto* r : {&prod, &rec, &dual}) r->finish();
  return {prod, rec, dual};
}

/// For p-convex E and p-concave F (constants one): E.M(E,F) = F,
/// E = M(M(E,F),F), and the dual transfer E.F' = M(E,F)'.
inline std::vector<CheckReport> check_division(const Space& E, const Space& F, double p, const WeightedModel& model,
                                               const SolverConfig& cfg, int samples = 5) {
  const std::string id = "division:" + describe(E) + "," + describe(F) + ",p=" + format_exponent(p);
  const double cp = convexity_constant(E, p, 3, model, cfg);
  if (cp > 1.0 + cfg.tol) return {detail::hypothesis_failed(id, cfg.tol, "E is not p-convex", cp)};
  const double cq = concavity_constant(F, p, 3, model, cfg);
  if (cq > 1.0 + cfg.tol) return {detail::hypothesis_failed(id, cfg.tol, "F is not p-concave", cq)};
  const Space ME = detail::mult_simplified(E, F, model);
  const bool closed = !ME.is<space::Mult>();
  const auto outer = closed ? detail::numeric(cfg) : cfg;
  const Space Fd = associate_simplified(F, model);
  auto prod = detail::make_report(id + "/product", cfg.tol);
  auto rec = detail::make_report(id + "/recovery", cfg.tol);
  auto dual = detail::make_report(id + "/duality", cfg.tol);
  std::mt19937_64 rng(cfg.seed + 6);
  for (int s = 0; s < samples; ++s) {
    {
      ReportTimer t(prod);
      const Vec f = detail::random_positive(rng, model.n());
      const double a = product_norm(E, ME, f, model, cfg).value, b = norm_eval(F, f, model, cfg).value;
      prod.record(rel_dev(a, b), format_point(f), b, a);
    }
    {
      ReportTimer t(rec);
      const Vec g = detail::random_positive(rng, model.n());
      const double a = mult_norm(ME, F, g, model, outer).value, b = norm_eval(E, g, model, cfg).value;
      rec.record(rel_dev(a, b), format_point(g), b, a);
    }
    {
      ReportTimer t(dual);
      const Vec y = detail::random_positive(rng, model.n());
      const double a = product_norm(E, Fd, y, model, cfg).value;
      const double b = dual_norm(ME, y, model, outer).value;
      dual.record(rel_dev(a, b), format_point(y), b, a);
    }
  }
  for (auto* r : {&prod, &rec, &dual}) r->finish();
  return {prod, rec, dual};
}

/// For p-convex and q-concave E (constants one): M(L_q,E).M(E,L_p) = L_s, 1/s = 1/p - 1/q.
inline CheckReport check_reisner(const Space& E, double p, double q, const WeightedModel& model,
                                 const SolverConfig& cfg, int samples = 8) {
  const std::string id = "reisner:" + describe(E) + ",p=" + format_exponent(p) + ",q=" + format_exponent(q);
  if (!(p < q)) throw StructureError("reisner check needs p < q");
  const double cp = convexity_constant(E, p, 3, model, cfg);
  if (cp > 1.0 + cfg.tol) return detail::hypothesis_failed(id, cfg.tol, "E is not p-convex", cp);
  const double cq = concavity_constant(E, q, 3, model, cfg);
  if (cq > 1.0 + cfg.tol) return detail::hypothesis_failed(id, cfg.tol, "E is not q-concave", cq);
  const Space A = detail::mult_simplified(lp(q), E, model);
  const Space B = detail::mult_simplified(E, lp(p), model);
  const Space Ls = lp(1.0 / (1.0 / p - 1.0 / q));
  auto rep = detail::make_report(id, cfg.tol);
  ReportTimer timer(rep);
  std::mt19937_64 rng(cfg.seed + 7);
  for (int s = 0; s < samples; ++s) {
    const Vec f = detail::random_positive(rng, model.n());
    const double a = product_norm(A, B, f, model, cfg).value, b = norm_eval(Ls, f, model, cfg).value;
    rep.record(rel_dev(a, b), format_point(f), b, a);
  }
  timer.stop();
  rep.finish();
  return rep;
}

/// The three-atom example: M(E,G) and M(F,G) in closed form, the
/// factorization ball of E.F is not convex at (1/2,1/2,1/2), and its hull is B_G.
inline std::vector<CheckReport> check_counterexample(const SolverConfig& cfg,
                                                     const Space& F = explicit_space(example_F())) {
  const auto model = WeightedModel::unit(3);
  const Space E = explicit_space(example_E());
  const Space G = explicit_space(example_G());
  auto a = detail::make_report("counterexample/a:M(E,G)", 1e-6);
  auto b = detail::make_report("counterexample/b:M(F,G)=E", 1e-6);
  auto c = detail::make_report("counterexample/c:rho>=1.02", 0.0);
  auto d = detail::make_report("counterexample/d:hull=G", cfg.tol);
  auto e = detail::make_report("counterexample/e:G(1/2)=1", 0.0);
  {
    ReportTimer t(a);
    const int k = 21;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) {
          const Vec y{-1.0 + 2.0 * i / (k - 1), -1.0 + 2.0 * j / (k - 1), -1.0 + 2.0 * l / (k - 1)};
          const double want = std::max(std::abs(y[0]) + std::abs(y[2]), std::abs(y[1]));
          const double got = mult_norm(E, G, y, model, cfg).value;
          a.record(want == 0.0 ? got : rel_dev(got, want), format_point(y), want, got);
        }
  }
  std::mt19937_64 rng(cfg.seed + 8);
  {
    ReportTimer t(b);
    for (int s = 0; s < 50; ++s) {
      const Vec x = detail::random_point(rng, 3);
      const double want = norm_eval(E, x, model, cfg).value;
      const double got = mult_norm(F, G, x, model, cfg).value;
      b.record(rel_dev(got, want), format_point(x), want, got);
    }
  }
  {
    ReportTimer t(c);
    const Vec h{0.5, 0.5, 0.5};
    const double got = rho_product(E, F, h, model, cfg).value;
    c.record(std::max(0.0, 1.02 - got) / 1.02, format_point(h), 1.02, got);
  }
  {
    ReportTimer t(d);
    for (int s = 0; s < 200; ++s) {
      const Vec f = detail::random_point(rng, 3);
      const double want = norm_eval(G, f, model, cfg).value;
      const double got = product_norm(E, F, f, model, cfg).value;
      d.record(rel_dev(got, want), format_point(f), want, got);
    }
  }
  {
    ReportTimer t(e);
    const Vec h{0.5, 0.5, 0.5};
    const double got = norm_eval(G, h, model, cfg).value;
    e.record(std::abs(got - 1.0), format_point(h), 1.0, got);
  }
  for (auto* r : {&a, &b, &c, &d, &e}) r->finish();
  return {a, b, c, d, e};
}

/// If M(E,L_p) = F and M(F,L_p) = E then E.F = L_p.
inline std::vector<CheckReport> check_maximal_pair(const Space& E, const Space& F, double p,
                                                   const WeightedModel& model, const SolverConfig& cfg,
                                                   int samples = 8) {
  const std::string id = "maximal_pair:" + describe(E) + "," + describe(F) + ",p=" + format_exponent(p);
  auto hyp = detail::make_report(id + "/hypothesis", cfg.tol);
  auto prod = detail::make_report(id + "/product", cfg.tol);
  const Space Lp = lp(p);
  std::mt19937_64 rng(cfg.seed + 9);
  {
    ReportTimer t(hyp);
    for (int s = 0; s < samples; ++s) {
      const Vec g = detail::random_positive(rng, model.n());
      const double a = mult_norm(E, Lp, g, model, cfg).value, b = norm_eval(F, g, model, cfg).value;
      hyp.record(rel_dev(a, b), "M(E,Lp) " + format_point(g), b, a);
      const double c = mult_norm(F, Lp, g, model, cfg).value, d = norm_eval(E, g, model, cfg).value;
      hyp.record(rel_dev(c, d), "M(F,Lp) " + format_point(g), d, c);
    }
    hyp.finish();
  }
  if (!hyp.pass) return {hyp};
  {
    ReportTimer t(prod);
    for (int s = 0; s < samples; ++s) {
      const Vec f = detail::random_positive(rng, model.n());
      const double a = product_norm(E, F, f, model, cfg).value, b = norm_eval(Lp, f, model, cfg).value;
      prod.record(rel_dev(a, b), format_point(f), b, a);
    }
    prod.finish();
  }
  return {hyp, prod};
}

/// d(a,p).g(a,p) = l_p, d(a,p)' = l_p'.g(a,p) and g(a,p)' = l_p'.d(a,p),
/// with the associates computed numerically.
inline std::vector<CheckReport> check_bennett(const WeightSeq& a, double p, const SolverConfig& cfg,
                                              int samples = 5) {
  const std::size_t n = a.size();
  const auto model = WeightedModel::unit(n);
  const std::string id = "bennett:n=" + std::to_string(n) + ",p=" + format_exponent(p);
  const Space D = dspace(a.a, p), G = gspace(a.a, p), Lp = lp(p), Lq = lp(conjugate_exponent(p));
  const auto nc = detail::numeric(cfg);
  auto fact = detail::make_report(id + "/d.g=lp", cfg.tol);
  auto dd = detail::make_report(id + "/d'", cfg.tol);
  auto gd = detail::make_report(id + "/g'", cfg.tol);
  std::mt19937_64 rng(cfg.seed + 10);
  for (int s = 0; s < samples; ++s) {
    {
      ReportTimer t(fact);
      const Vec f = detail::random_positive(rng, n);
      const double x = rho_product(D, G, f, model, cfg).value, y = norm_eval(Lp, f, model, cfg).value;
      fact.record(rel_dev(x, y), format_point(f), y, x);
    }
    {
      ReportTimer t(dd);
      const Vec w = detail::random_positive(rng, n);
      const double x = dual_norm(D, w, model, nc).value, y = product_norm(Lq, G, w, model, cfg).value;
      dd.record(rel_dev(x, y), format_point(w), y, x);
    }
    {
      ReportTimer t(gd);
      const Vec w = detail::random_positive(rng, n);
      const double x = dual_norm(G, w, model, nc).value, y = product_norm(Lq, D, w, model, cfg).value;
      gd.record(rel_dev(x, y), format_point(w), y, x);
    }
  }
  for (auto* r : {&fact, &dd, &gd}) r->finish();
  return {fact, dd, gd};
}

/// D_p(T) is p-concave with constant one and equals L_p . M(L_p, D_p(T)).
inline std::vector<CheckReport> check_matrix_domain(const std::vector<Vec>& T, double p, const SolverConfig& cfg,
                                                    int samples = 5) {
  const Space MD = matrix_domain(T, p);
  const std::size_t n = T.size();
  const auto model = WeightedModel::unit(n);
  const std::string id = "matrix_domain:n=" + std::to_string(n) + ",p=" + format_exponent(p);
  auto conc = detail::make_report(id + "/concavity", 1e-6);
  auto prod = detail::make_report(id + "/product", cfg.tol);
  {
    ReportTimer t(conc);
    const double c = concavity_constant(MD, p, 3, model, cfg);
    conc.record(std::max(0.0, c - 1.0), "sampled tuples", 1.0, c);
    conc.finish();
  }
  const Space Lp = lp(p);
  const Space M = mult(Lp, MD);
  std::mt19937_64 rng(cfg.seed + 11);
  {
    ReportTimer t(prod);
    for (int s = 0; s < samples; ++s) {
      const Vec f = detail::random_positive(rng, n);
      Vec Tf(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Tf[i] += T[i][j] * f[j];
      const double want = norm_eval(Lp, Tf, model, cfg).value;
      const double got = product_norm(Lp, M, f, model, cfg).value;
      prod.record(rel_dev(got, want), format_point(f), want, got);
    }
    prod.finish();
  }
  return {conc, prod};
}

// ------------------------------------------------------------------- suites

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"lozanovskii", "product_dual", "multiplier",    "calderon",
                                            "cancellation", "factor_lp",   "division",      "reisner",
                                            "counterexample", "maximal_pair", "bennett", "matrix_domain"};
  return ids;
}

inline std::vector<Vec> lower_triangular_ones(std::size_t n) {
  std::vector<Vec> T(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) T[i][j] = 1.0;
  return T;
}

inline std::vector<Vec> random_positive_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> ud(0.1, 2.0);
  std::vector<Vec> T(n, Vec(n));
  for (auto& r : T)
    for (double& v : r) v = ud(rng);
  return T;
}

/// Runs the default instances of one suite. Throws StructureError for an unknown id.
inline std::vector<CheckReport> run_suite(const std::string& id, const SolverConfig& cfg) {
  std::vector<CheckReport> out;
  auto add = [&](CheckReport r) { out.push_back(std::move(r)); };
  auto add_all = [&](std::vector<CheckReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  const int ns = detail::sample_count(cfg, 10);
  std::mt19937_64 rng(cfg.seed);
  if (id == "lozanovskii") {
    add(check_lozanovskii(lp(3), WeightedModel::unit(4), cfg, ns));
    add(check_lozanovskii(linf(), WeightedModel::unit(3), cfg, ns));
    add(check_lozanovskii(dspace(Vec(4, 1.0), 1.0), WeightedModel::unit(4), cfg, ns));
    for (int k = 0; k < 4; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k);
      const auto model = random_model(rng, n);
      add(check_lozanovskii(random_space(rng, n, 2), model, cfg, ns));
    }
  } else if (id == "product_dual") {
    const auto m2 = WeightedModel::unit(2);
    add(check_product_dual(lp(2), lp(2), m2, cfg, ns));
    add(check_product_dual(lp(1), linf(), WeightedModel::unit(3), cfg, ns));
    add(check_product_dual(explicit_space(example_E()), explicit_space(example_F()), WeightedModel::unit(3), cfg, ns));
    for (int k = 0; k < 2; ++k) {
      const auto model = random_model(rng, 3);
      add(check_product_dual(random_space(rng, 3, 1), random_space(rng, 3, 1), model, cfg, ns));
    }
  } else if (id == "multiplier") {
    const auto m3 = WeightedModel::unit(3);
    add(check_multiplier_recovery(lp(3), lp(3), m3, cfg, std::min(ns, 5)));
    add(check_multiplier_recovery(lp(2), linf(), m3, cfg, std::min(ns, 5)));
    add(check_multiplier_recovery(convexify(lp(1), 2.0), lp(2), m3, cfg, std::min(ns, 5)));
  } else if (id == "calderon") {
    const auto m3 = WeightedModel::unit(3);
    add(check_calderon_duality(lp(1), linf(), 2.0, m3, cfg, ns));
    add(check_calderon_duality(lp(3), lp(1), 2.0, m3, cfg, ns));
    add(check_calderon_duality(lp(1.5), lp(1.5), 3.0, m3, cfg, ns));
    for (int k = 0; k < 2; ++k) {
      const auto model = random_model(rng, 3);
      add(check_calderon_duality(random_space(rng, 3, 1), random_space(rng, 3, 1), 2.0, model, cfg, ns));
    }
  } else if (id == "cancellation") {
    const auto m3 = WeightedModel::unit(3);
    add(check_cancellation(lp(2), lp(2), lp(2, Vec(3, 2.0)), m3, cfg, ns));
    add(check_cancellation(lp(2), lp(2), lp(2), m3, cfg, ns));
    add(check_cancellation(lp(2), lp(6), lp(3), m3, cfg, ns));
  } else if (id == "factor_lp") {
    for (double r : {2.0, 3.0, 4.0}) add_all(check_factor_lp(lp(r), 2.0, WeightedModel::unit(4), cfg, ns));
    add_all(check_factor_lp(calderon(lp(2), linf(), 0.5), 2.0, WeightedModel::unit(3), cfg, ns));
  } else if (id == "division") {
    const auto m3 = WeightedModel::unit(3);
    add_all(check_division(lp(2), lp(2), 2.0, m3, cfg, std::min(ns, 5)));
    add_all(check_division(lp(2), matrix_domain(lower_triangular_ones(3), 2.0), 2.0, m3, cfg, std::min(ns, 3)));
    add_all(check_division(convexify(lp(1.5), 2.0), lp(2), 2.0, m3, cfg, std::min(ns, 5)));
  } else if (id == "reisner") {
    const auto m4 = WeightedModel::unit(4);
    add(check_reisner(lp(3), 2.0, 4.0, m4, cfg, ns));
    add(check_reisner(lp(2), 2.0, 4.0, m4, cfg, ns));
    add(check_reisner(calderon(lp(2), lp(4), 0.5), 2.0, 4.0, WeightedModel::unit(3), cfg, ns));
  } else if (id == "counterexample") {
    add_all(check_counterexample(cfg));
  } else if (id == "maximal_pair") {
    const auto m3 = WeightedModel::unit(3);
    add_all(check_maximal_pair(lp(4), lp(4), 2.0, m3, cfg, ns));
    add_all(check_maximal_pair(lp(2), linf(), 2.0, m3, cfg, ns));
    add_all(check_maximal_pair(convexify(lp(1), 2.0), linf(), 2.0, m3, cfg, ns));
  } else if (id == "bennett") {
    add_all(check_bennett(WeightSeq(Vec(4, 1.0)), 1.0, cfg, std::min(ns, 5)));
    add_all(check_bennett(WeightSeq({1.0, 0.5, 0.25, 0.125}), 2.0, cfg, std::min(ns, 5)));
    add_all(check_bennett(WeightSeq({1.0}), 2.0, cfg, 2));
  } else if (id == "matrix_domain") {
    add_all(check_matrix_domain(random_positive_matrix(rng, 3), 2.0, cfg, std::min(ns, 3)));
    add_all(check_matrix_domain(lower_triangular_ones(4), 2.0, cfg, std::min(ns, 3)));
    add_all(check_matrix_domain(random_positive_matrix(rng, 4), 3.0, cfg, std::min(ns, 3)));
  } else {
    throw StructureError("unknown suite '" + id + "'");
  }
  return out;
}

}  // namespace banach
