// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Randomized invariants over the random space family.

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "banach/banach.hpp"

using namespace banach;
using Catch::Matchers::WithinRel;

namespace {

struct Instance {
  WeightedModel model;
  Space E;
  Vec f;
};

Instance draw(std::mt19937_64& rng, int depth = 1) {
  std::uniform_int_distribution<int> nd(2, 4);
  const auto n = static_cast<std::size_t>(nd(rng));
  auto model = random_model(rng, n);
  Space E = random_space(rng, n, depth);
  Vec f(n);
  std::uniform_real_distribution<double> ud(0.1, 2.0);
  for (double& v : f) v = ud(rng);
  return {std::move(model), std::move(E), std::move(f)};
}

}  // namespace

TEST_CASE("random spaces satisfy the norm axioms", "[property]") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 10; ++k) {
    const auto I = draw(rng);
    INFO(describe(I.E));
    CHECK(validate_norm_axioms(I.E, I.model).pass);
  }
}

TEST_CASE("Hoelder inequality with the associate norm", "[property]") {
  std::mt19937_64 rng(32);
  SolverConfig numeric;
  numeric.closed_forms = false;
  for (int k = 0; k < 10; ++k) {
    const auto I = draw(rng);
    const Vec g = detail::random_positive(rng, I.model.n());
    const double lhs = I.model.pairing(I.f, g);
    const double rhs = norm_eval(I.E, I.f, I.model).value * dual_norm(I.E, g, I.model, numeric).value;
    INFO(describe(I.E));
    CHECK(lhs <= rhs * (1.0 + 1e-6));
  }
}

TEST_CASE("M(E,E) is L_inf", "[property]") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 8; ++k) {
    const auto I = draw(rng, 0);
    const double mx = *std::max_element(I.f.begin(), I.f.end());
    INFO(describe(I.E));
    CHECK_THAT(mult_norm(I.E, I.E, I.f, I.model).value, WithinRel(mx, 1e-3));
  }
}

TEST_CASE("E.E' is L1 on random spaces", "[property]") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 10; ++k) {
    const auto I = draw(rng, 2);
    const double want = I.model.l1(I.f);
    INFO(describe(I.E));
    CHECK_THAT(rho_product(I.E, associate(I.E), I.f, I.model).value, WithinRel(want, 1e-3));
  }
}

TEST_CASE("products are symmetric and homogeneous", "[property]") {
  std::mt19937_64 rng(35);
  for (int k = 0; k < 6; ++k) {
    const auto I = draw(rng, 0);
    const Space F = random_space(rng, I.model.n(), 0);
    const double a = product_norm(I.E, F, I.f, I.model).value;
    const double b = product_norm(F, I.E, I.f, I.model).value;
    Vec f3 = I.f;
    for (double& v : f3) v *= 3.0;
    INFO(describe(I.E) << " . " << describe(F));
    CHECK_THAT(a, WithinRel(b, 1e-3));
    CHECK_THAT(product_norm(I.E, F, f3, I.model).value, WithinRel(3.0 * a, 1e-3));
    CHECK(a <= rho_product(I.E, F, I.f, I.model).value * (1.0 + 1e-6));
  }
}

TEST_CASE("convexification, concavification and scaling follow their definitions", "[property]") {
  std::mt19937_64 rng(36);
  for (int k = 0; k < 10; ++k) {
    const auto I = draw(rng);
    const double p = 1.5 + 0.75 * (k % 3);
    Vec fp = I.f;
    for (double& v : fp) v = std::pow(v, p);
    INFO(describe(I.E) << " p=" << p);
    const double conv = norm_eval(convexify(I.E, p), I.f, I.model).value;
    CHECK_THAT(conv, WithinRel(std::pow(norm_eval(I.E, fp, I.model).value, 1.0 / p), 1e-9));
    CHECK_THAT(norm_eval(concavify(convexify(I.E, p), p), I.f, I.model).value,
               WithinRel(norm_eval(I.E, I.f, I.model).value, 1e-9));
    Vec s(I.model.n()), sf(I.model.n());
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] = 0.5 + i;
      sf[i] = s[i] * I.f[i];
    }
    CHECK_THAT(norm_eval(scaled(I.E, s), I.f, I.model).value, WithinRel(norm_eval(I.E, sf, I.model).value, 1e-9));
  }
}

TEST_CASE("norms ignore signs and respect the lattice order", "[property]") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 10; ++k) {
    const auto I = draw(rng);
    Vec neg = I.f, smaller = I.f;
    for (std::size_t i = 0; i < neg.size(); ++i) {
      if (i % 2 == 0) neg[i] = -neg[i];
      smaller[i] *= 0.5 + 0.5 * static_cast<double>(i % 2);
    }
    const double v = norm_eval(I.E, I.f, I.model).value;
    INFO(describe(I.E));
    CHECK_THAT(norm_eval(I.E, neg, I.model).value, WithinRel(v, 1e-9));
    CHECK(norm_eval(I.E, smaller, I.model).value <= v * (1.0 + 1e-9));
  }
}
