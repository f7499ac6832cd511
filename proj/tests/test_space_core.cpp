// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "banach/banach.hpp"

using namespace banach;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("weighted model rejects bad weights", "[model]") {
  CHECK_THROWS_AS(WeightedModel(Vec{}), StructureError);
  CHECK_THROWS_AS(WeightedModel(Vec{1.0, 0.0}), StructureError);
  CHECK_THROWS_AS(WeightedModel(Vec{1.0, -2.0}), StructureError);
  CHECK_THROWS_AS(WeightedModel(Vec{1.0, std::nan("")}), StructureError);
  const WeightedModel m({1.0, 0.5, 2.0});
  CHECK(m.n() == 3);
  CHECK_FALSE(m.is_unit());
  CHECK_THAT(m.integrate(Vec{1.0, 2.0, 3.0}), WithinAbs(1.0 + 1.0 + 6.0, 1e-15));
  CHECK_THROWS_AS(m.integrate(Vec{1.0, 2.0}), DimensionError);
}

TEST_CASE("solver config validation", "[model]") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.tol = 0.0;
  CHECK_THROWS_AS(c.validate(), StructureError);
  c = {};
  c.grid = 2;
  CHECK_THROWS_AS(c.validate(), StructureError);
  c = {};
  c.starts = 0;
  CHECK_THROWS_AS(c.validate(), StructureError);
}

TEST_CASE("conjugate exponents", "[model]") {
  CHECK(conjugate_exponent(1.0) == kInf);
  CHECK(conjugate_exponent(kInf) == 1.0);
  CHECK_THAT(conjugate_exponent(2.0), WithinAbs(2.0, 1e-15));
  CHECK_THAT(conjugate_exponent(3.0), WithinAbs(1.5, 1e-15));
}

TEST_CASE("constructors validate parameters", "[space]") {
  CHECK_THROWS_AS(lp(0.5), StructureError);
  CHECK_THROWS_AS(lp(2.0, {1.0, -1.0}), StructureError);
  CHECK_THROWS_AS(calderon(lp(1), lp(2), 0.0), StructureError);
  CHECK_THROWS_AS(calderon(lp(1), lp(2), 1.0), StructureError);
  CHECK_THROWS_AS(convexify(lp(1), 0.5), StructureError);
  CHECK_THROWS_AS(dspace({0.0, 1.0}, 1.0), StructureError);
  CHECK_THROWS_AS(matrix_domain({{1.0, 0.0}, {1.0, 0.0}}, 2.0), StructureError);
  CHECK_THROWS_AS(matrix_domain({{1.0, 0.0}, {0.0, 1.0}}, 1.0), StructureError);
  CHECK_NOTHROW(matrix_domain({{1.0, 0.0}, {1.0, 1.0}}, 2.0));
}

TEST_CASE("dimension checks against the model", "[space]") {
  const auto m3 = WeightedModel::unit(3);
  CHECK_NOTHROW(check_dimensions(lp(2), m3));
  CHECK_THROWS_AS(check_dimensions(lp(2, {1.0, 1.0}), m3), DimensionError);
  CHECK_THROWS_AS(check_dimensions(dspace({1.0, 1.0}, 1.0), m3), DimensionError);
  CHECK_THROWS_AS(check_dimensions(explicit_space(example_E()), WeightedModel::unit(2)), StructureError);
  CHECK_THROWS_AS(norm_eval(lp(2), {1.0, 2.0}, m3), DimensionError);
}

TEST_CASE("describe is stable", "[space]") {
  CHECK(describe(lp(2)) == "Lp(2)");
  CHECK(describe(linf()) == "Linf");
  CHECK(describe(calderon(lp(1), linf(), 0.5)) == "Calderon(Lp(1), Linf, 0.5)");
  CHECK(describe(product(lp(2), lp(2))) == describe(product(lp(2), lp(2))));
}

TEST_CASE("explicit norms expand to the same function", "[explicit]") {
  using X = ExplicitExpr;
  const auto expr = X::sum({X::abs(0), X::max({X::abs(1), X::scale(2.0, X::abs(2))})});
  const auto N = make_explicit("t", expr, 3);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 100; ++k) {
    const Vec x{nd(rng), nd(rng), nd(rng)};
    // direct formula
    const double want = std::abs(x[0]) + std::max(std::abs(x[1]), 2.0 * std::abs(x[2]));
    CHECK_THAT(N.eval(x), WithinAbs(want, 1e-12));
    CHECK_THAT(expr.eval(x), WithinAbs(want, 1e-12));
  }
  CHECK_THROWS_AS(make_explicit("bad", X::abs(3), 3), StructureError);
  CHECK_THROWS_AS(make_explicit("gap", X::abs(0), 2), StructureError);
}

TEST_CASE("example norms take their defining values", "[explicit]") {
  const auto E = example_E(), F = example_F(), G = example_G();
  const Vec x{0.3, -0.7, 0.5};
  CHECK_THAT(E.eval(x), WithinAbs(std::max(0.3 + 0.7, 0.5), 1e-15));
  CHECK_THAT(F.eval(x), WithinAbs(std::max(0.3 + 0.5, 0.7), 1e-15));
  CHECK_THAT(G.eval(x), WithinAbs(0.3 + std::max(0.7, 0.5), 1e-15));
  const Vec h{0.5, 0.5, 0.5};
  CHECK(G.eval(h) == 1.0);
}

TEST_CASE("polytope vertices of the l1 and l_inf balls", "[explicit]") {
  // ||x|| = |x1| + |x2|: the nonnegative part of the ball has vertices e1, e2 (and 0)
  const auto v1 = polytope_vertices({{1.0, 1.0}}, 2);
  bool e1 = false, e2 = false;
  for (const auto& v : v1) {
    e1 = e1 || (std::abs(v[0] - 1.0) < 1e-12 && std::abs(v[1]) < 1e-12);
    e2 = e2 || (std::abs(v[1] - 1.0) < 1e-12 && std::abs(v[0]) < 1e-12);
  }
  CHECK(e1);
  CHECK(e2);
  // max(|x1|, |x2|): vertex (1,1)
  const auto vi = polytope_vertices({{1.0, 0.0}, {0.0, 1.0}}, 2);
  bool ones = false;
  for (const auto& v : vi) ones = ones || (std::abs(v[0] - 1.0) < 1e-12 && std::abs(v[1] - 1.0) < 1e-12);
  CHECK(ones);
}

TEST_CASE("closed-form associates agree with the numeric dual", "[associate]") {
  const WeightedModel w({1.0, 0.5, 2.0});
  SolverConfig numeric;
  numeric.closed_forms = false;
  const std::vector<Space> spaces{lp(1.0), lp(3.0, {1.0, 2.0, 0.5}), linf(), dspace({1.0, 0.5, 0.25}, 1.0),
                                  gspace({1.0, 0.7, 0.2}, 1.0), explicit_space(example_E()),
                                  calderon(lp(1.0), lp(4.0), 0.3)};
  const Vec y{0.4, 1.3, 0.8};
  for (const auto& E : spaces) {
    INFO(describe(E));
    REQUIRE(closed_form_associate(E, w).has_value());
    const double a = norm_eval(associate(E), y, w).value;
    const double b = norm_eval(associate(E), y, w, numeric).value;
    CHECK_THAT(a, WithinRel(b, 1e-4));
  }
}

TEST_CASE("lp closed forms of derived constructors", "[associate]") {
  const auto l = lp_form(convexify(lp(1.5), 2.0));
  REQUIRE(l);
  CHECK_THAT(l->p, WithinAbs(3.0, 1e-15));
  const auto c = lp_form(calderon(lp(2.0), lp(6.0), 0.5));
  REQUIRE(c);
  CHECK_THAT(1.0 / c->p, WithinAbs(0.5 * (0.5 + 1.0 / 6.0), 1e-15));
  const auto d = lp_form(matrix_domain({{2.0, 0.0}, {0.0, 3.0}}, 2.0));
  REQUIRE(d);
  CHECK(d->scale == Vec{2.0, 3.0});
  CHECK_FALSE(lp_form(matrix_domain({{1.0, 0.0}, {1.0, 1.0}}, 2.0)));
  CHECK_FALSE(lp_form(dspace({1.0, 1.0}, 1.0)));
}
