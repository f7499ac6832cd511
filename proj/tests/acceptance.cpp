// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "banach/banach.hpp"

using namespace banach;

namespace {

struct Outcome {
  bool pass = true;
  double worst = 0.0;  // largest deviation seen, in the criterion's own units
  std::string note;
};

void absorb(Outcome& o, const CheckReport& r) {
  o.pass = o.pass && r.pass;
  if (std::isfinite(r.max_rel_deviation)) o.worst = std::max(o.worst, r.max_rel_deviation);
  if (!r.pass && o.note.empty()) o.note = "first failure " + r.check_id;
}

void absorb(Outcome& o, const std::vector<CheckReport>& rs) {
  for (const auto& r : rs) absorb(o, r);
}

int failures = 0;

void run(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0.0 && secs >= time_limit) {
    o.pass = false;
    o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d (%s): worst deviation %.3g, %.1f s%s%s\n", o.pass ? "PASS" : "FAIL", id, title,
              o.worst, secs, time_limit > 0.0 ? (" (limit " + std::to_string(static_cast<int>(time_limit)) + " s)").c_str() : "",
              o.note.empty() ? "" : (" [" + o.note + "]").c_str());
  std::fflush(stdout);
}

Vec positive(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> ud(0.1, 2.0);
  Vec v(n);
  for (double& x : v) x = ud(rng);
  return v;
}

}  // namespace

int main() {
  const SolverConfig cfg;

  run(1, "three-atom product example", 30.0, [&] {
    Outcome o;
    absorb(o, check_counterexample(cfg));
    return o;
  });

  run(2, "E.E' = L1 on 50 random spaces", 120.0, [&] {
    Outcome o;
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
      const auto model = random_model(rng, n);
      absorb(o, check_lozanovskii(random_space(rng, n, 2), model, cfg, 20));
    }
    return o;
  });

  run(3, "product and interpolation duality on 20 pairs", 0.0, [&] {
    Outcome o;
    std::mt19937_64 rng(3033);
    for (int k = 0; k < 20; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
      const auto model = random_model(rng, n);
      const Space E = random_space(rng, n, 1);
      const Space F = random_space(rng, n, 1);
      absorb(o, check_product_dual(E, F, model, cfg, 5));
      absorb(o, check_calderon_duality(E, F, 2.0, model, cfg, 5));
    }
    return o;
  });

  run(4, "d(a,p).g(a,p) = lp and both dual identities, n=8", 0.0, [&] {
    Outcome o;
    Vec halves(8);
    for (std::size_t k = 0; k < 8; ++k) halves[k] = std::ldexp(1.0, -static_cast<int>(k));
    for (const Vec& a : {Vec(8, 1.0), halves})
      for (double p : {1.0, 2.0, 3.0}) absorb(o, check_bennett(WeightSeq(a), p, cfg, 3));
    return o;
  });

  run(5, "factorization through Lp and the three-exponent product", 0.0, [&] {
    Outcome o;
    const auto m4 = WeightedModel::unit(4);
    for (double r : {2.0, 3.0, 4.0}) absorb(o, check_factor_lp(lp(r), 2.0, m4, cfg));
    absorb(o, check_reisner(lp(3), 2.0, 4.0, m4, cfg));
    return o;
  });

  run(6, "matrix domains of 10 random 4x4 operators", 0.0, [&] {
    Outcome o;
    std::mt19937_64 rng(6006);
    for (int k = 0; k < 10; ++k) {
      const auto T = random_positive_matrix(rng, 4);
      for (double p : {2.0, 3.0}) absorb(o, check_matrix_domain(T, p, cfg, 2));
    }
    return o;
  });

  run(7, "solver vs brute-force grid oracle, n=3, grid=41", 0.0, [&] {
    Outcome o;
    SolverConfig oc = cfg;
    oc.grid = 41;
    std::mt19937_64 rng(7007);
    const char* names[] = {"dual", "mult", "rho", "product"};
    for (OracleKind kind : {OracleKind::Dual, OracleKind::Mult, OracleKind::Rho, OracleKind::Product}) {
      for (int k = 0; k < 10; ++k) {
        const auto model = random_model(rng, 3);
        const Space E = random_space(rng, 3, 1);
        const Space F = random_space(rng, 3, 1);
        const Vec v = positive(rng, 3);
        const auto ref = brute_force_oracle(kind, E, F, v, model, oc);
        double got = 0.0;
        switch (kind) {
          case OracleKind::Dual: got = dual_norm(E, v, model, cfg).value; break;
          case OracleKind::Mult: got = mult_norm(E, F, v, model, cfg).value; break;
          case OracleKind::Rho: got = rho_product(E, F, v, model, cfg).value; break;
          case OracleKind::Product: got = product_norm(E, F, v, model, cfg).value; break;
        }
        // grid bound plus the solver's own relative tolerance
        const double allowed = ref.error_bound + cfg.tol * ref.value;
        const double gap = std::abs(got - ref.value);
        o.worst = std::max(o.worst, gap / std::max(allowed, 1e-300));
        if (gap > allowed) {
          o.pass = false;
          if (o.note.empty())
            o.note = std::string(names[static_cast<int>(kind)]) + " " + describe(E) + "," + describe(F) + " solver " +
                     std::to_string(got) + " oracle " + std::to_string(ref.value) + " +- " +
                     std::to_string(ref.error_bound);
        }
      }
    }
    return o;
  });

  run(8, "triangle verdict for rho vs 2-convexity of the half interpolant", 0.0, [&] {
    Outcome o;
    std::mt19937_64 rng(8008);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    static constexpr double kExp[] = {1.0, 1.5, 2.0, 3.0, 4.0, kInf};
    std::vector<std::pair<Space, Space>> pairs;
    for (int k = 0; k < 12; ++k) {
      Vec s(3), t(3);
      for (double& x : s) x = 0.5 + 1.5 * ud(rng);
      for (double& x : t) x = 0.5 + 1.5 * ud(rng);
      pairs.emplace_back(lp(kExp[k % 6], s), lp(kExp[(k * 5 + 1) % 6], t));
    }
    const Vec a{1.0, 0.6, 0.3};
    pairs.emplace_back(dspace(a, 1.0), gspace(a, 1.0));
    pairs.emplace_back(dspace(a, 2.0), gspace(a, 2.0));
    pairs.emplace_back(dspace(a, 1.0), dspace(a, 1.0));
    pairs.emplace_back(gspace(a, 1.0), gspace(a, 2.0));
    pairs.emplace_back(dspace(a, 2.0), lp(1.0));
    pairs.emplace_back(explicit_space(example_E()), explicit_space(example_F()));
    pairs.emplace_back(explicit_space(example_E()), explicit_space(example_E()));
    pairs.emplace_back(explicit_space(example_F()), lp(kInf));
    std::size_t agree = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto model = WeightedModel::unit(3);
      const auto& [E, F] = pairs[k];
      const bool triangle = validate_norm_axioms(rho(E, F), model, cfg).pass;
      const double c2 = convexity_constant(calderon(E, F, 0.5), 2.0, 3, model, cfg);
      const bool convex = c2 <= 1.0 + 1e-3;
      if (triangle == convex) {
        ++agree;
      } else {
        o.pass = false;
        if (o.note.empty())
          o.note = describe(E) + "," + describe(F) + ": triangle " + (triangle ? "holds" : "fails") +
                   ", 2-convexity constant " + std::to_string(c2);
      }
    }
    o.worst = static_cast<double>(pairs.size() - agree);
    o.note = std::to_string(agree) + "/" + std::to_string(pairs.size()) + " verdicts agree" +
             (o.note.empty() ? "" : "; " + o.note);
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAILED", failures);
  return failures == 0 ? 0 : 1;
}
