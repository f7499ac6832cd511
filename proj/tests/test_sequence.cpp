// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "banach/banach.hpp"

using namespace banach;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// quadratic-time versions of the defining formulas
double d_slow(const Vec& a, double p, const Vec& x) {
  double s = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    double m = 0.0;
    for (std::size_t k = n; k < x.size(); ++k) m = std::max(m, std::abs(x[k]));
    s += a[n] * std::pow(m, p);
  }
  return std::pow(s, 1.0 / p);
}

double g_slow(const Vec& a, double p, const Vec& x) {
  double best = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      num += std::pow(std::abs(x[k]), p);
      den += a[k];
    }
    best = std::max(best, num / den);
  }
  return std::pow(best, 1.0 / p);
}

}  // namespace

TEST_CASE("weight sequences", "[sequence]") {
  CHECK_THROWS_AS(WeightSeq(Vec{}), StructureError);
  CHECK_THROWS_AS(WeightSeq(Vec{0.0, 1.0}), StructureError);
  CHECK_THROWS_AS(WeightSeq(Vec{1.0, -1.0}), StructureError);
  const WeightSeq a({1.0, 0.0, 2.0});  // internal zeros are allowed
  CHECK(a.A == Vec{1.0, 1.0, 3.0});
}

TEST_CASE("d and g norms match their formulas", "[sequence]") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 8;
    Vec a(n), x(n);
    a[0] = 0.5 + ud(rng);
    for (std::size_t i = 1; i < n; ++i) a[i] = ud(rng) < 0.2 ? 0.0 : ud(rng);
    for (double& v : x) v = nd(rng);
    const double p = 1.0 + 2.0 * ud(rng);
    const WeightSeq w(a);
    CHECK_THAT(d_norm(w, p, x), WithinRel(d_slow(a, p, x), 1e-12));
    CHECK_THAT(g_norm(w, p, x), WithinRel(g_slow(a, p, x), 1e-12));
  }
  CHECK_THROWS_AS(d_norm(WeightSeq({1.0}), 0.5, Vec{1.0}), StructureError);
  CHECK_THROWS_AS(g_norm(WeightSeq({1.0, 1.0}), 2.0, Vec{1.0}), DimensionError);
}

TEST_CASE("d and g fixtures", "[sequence]") {
  const WeightSeq ones({1.0, 1.0});
  CHECK_THAT(d_norm(ones, 1.0, Vec{0.0, 1.0}), WithinAbs(2.0, 1e-15));
  CHECK_THAT(d_norm(ones, 1.0, Vec{1.0, 0.0}), WithinAbs(1.0, 1e-15));
  // g with a = ones is the maximal Cesaro average
  CHECK_THAT(g_norm(ones, 1.0, Vec{1.0, 3.0}), WithinAbs(2.0, 1e-15));
  CHECK_THAT(g_norm(ones, 2.0, Vec{3.0, 0.0}), WithinAbs(3.0, 1e-15));
}

TEST_CASE("space leaves agree with the sequence formulas", "[sequence]") {
  const Vec a{1.0, 0.5, 0.25, 0.125};
  const Vec x{0.2, 1.0, 0.4, 0.7};
  const auto m = WeightedModel::unit(4);
  for (double p : {1.0, 2.0, 3.0}) {
    CHECK_THAT(norm_eval(dspace(a, p), x, m).value, WithinRel(d_norm(WeightSeq(a), p, x), 1e-12));
    CHECK_THAT(norm_eval(gspace(a, p), x, m).value, WithinRel(g_norm(WeightSeq(a), p, x), 1e-12));
  }
}

TEST_CASE("d(a,1) and g(a,1) are mutually associate", "[sequence]") {
  SolverConfig numeric;
  numeric.closed_forms = false;
  const Vec a{1.0, 0.6, 0.3, 0.1};
  const auto m = WeightedModel::unit(4);
  std::mt19937_64 rng(22);
  for (int t = 0; t < 5; ++t) {
    const Vec y = detail::random_positive(rng, 4);
    CHECK_THAT(dual_norm(dspace(a, 1.0), y, m, numeric).value, WithinRel(g_norm(WeightSeq(a), 1.0, y), 1e-3));
    CHECK_THAT(dual_norm(gspace(a, 1.0), y, m, numeric).value, WithinRel(d_norm(WeightSeq(a), 1.0, y), 1e-3));
  }
}

TEST_CASE("d.g factorizes lp", "[sequence]") {
  const Vec a{1.0, 0.7, 0.2};
  const auto m = WeightedModel::unit(3);
  const Vec f{0.5, 1.2, 0.3};
  for (double p : {1.0, 2.0}) {
    const double lp_norm = std::pow(std::pow(0.5, p) + std::pow(1.2, p) + std::pow(0.3, p), 1.0 / p);
    CHECK_THAT(product_norm(dspace(a, p), gspace(a, p), f, m).value, WithinRel(lp_norm, 1e-3));
  }
}
