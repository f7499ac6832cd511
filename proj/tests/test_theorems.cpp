// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>

#include "banach/banach.hpp"

using namespace banach;

namespace {

bool all_pass(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return !rs.empty();
}

void require_consistent(const CheckReport& r) {
  INFO(r.check_id);
  CHECK(r.pass == (r.max_rel_deviation <= r.tolerance));
  CHECK(r.instances > 0);
  if (!r.pass) CHECK_FALSE(r.witnesses.empty());
}

}  // namespace

TEST_CASE("three-atom example gives five passing assertions", "[theorems]") {
  const auto rs = check_counterexample({});
  REQUIRE(rs.size() == 5);
  for (const auto& r : rs) require_consistent(r);
  CHECK(all_pass(rs));
}

TEST_CASE("an alternative F breaks the dependent assertions", "[theorems]") {
  // F_ex is M(E_ex, G_ex); with F = E_ex, M(F, G) = F_ex differs from E_ex
  const auto rs = check_counterexample({}, explicit_space(example_E()));
  REQUIRE(rs.size() == 5);
  CHECK(rs[0].pass);
  CHECK_FALSE(rs[1].pass);
}

TEST_CASE("E.E' is L1", "[theorems]") {
  const SolverConfig cfg;
  CHECK(check_lozanovskii(lp(3), WeightedModel({1.0, 2.0, 0.5}), cfg, 5).pass);
  CHECK(check_lozanovskii(explicit_space(example_G()), WeightedModel::unit(3), cfg, 5).pass);
  CHECK(check_lozanovskii(gspace({1.0, 0.5, 0.5}, 2.0), WeightedModel::unit(3), cfg, 5).pass);
}

TEST_CASE("dualities", "[theorems]") {
  const SolverConfig cfg;
  const auto m3 = WeightedModel::unit(3);
  CHECK(check_product_dual(lp(2), lp(3), m3, cfg, 3).pass);
  CHECK(check_product_dual(explicit_space(example_E()), explicit_space(example_F()), m3, cfg, 3).pass);
  CHECK(check_calderon_duality(lp(1), lp(3), 2.0, m3, cfg, 3).pass);
  CHECK(check_calderon_duality(dspace({1.0, 0.5, 0.2}, 1.0), lp(2), 2.0, m3, cfg, 3).pass);
}

TEST_CASE("multiplier recovery and cancellation", "[theorems]") {
  const SolverConfig cfg;
  const auto m3 = WeightedModel::unit(3);
  CHECK(check_multiplier_recovery(lp(3), lp(3), m3, cfg, 3).pass);
  CHECK(check_cancellation(lp(2), lp(6), lp(3), m3, cfg, 3).pass);
}

TEST_CASE("factorization through Lp", "[theorems]") {
  const SolverConfig cfg;
  const auto m3 = WeightedModel::unit(3);
  const auto ok = check_factor_lp(lp(3), 2.0, m3, cfg, 3);
  REQUIRE(ok.size() == 3);
  CHECK(all_pass(ok));
  // l1 is not 2-convex: the hypothesis report fails and nothing else runs
  const auto bad = check_factor_lp(lp(1), 2.0, m3, cfg, 3);
  REQUIRE(bad.size() == 1);
  CHECK_FALSE(bad[0].pass);
  REQUIRE_FALSE(bad[0].witnesses.empty());
  CHECK(bad[0].witnesses[0].input.find("hypothesis") != std::string::npos);
}

TEST_CASE("division and the three-exponent product", "[theorems]") {
  const SolverConfig cfg;
  const auto m3 = WeightedModel::unit(3);
  CHECK(all_pass(check_division(lp(2), lp(2), 2.0, m3, cfg, 3)));
  CHECK(check_reisner(lp(3), 2.0, 4.0, WeightedModel::unit(3), cfg, 3).pass);
  CHECK_THROWS_AS(check_reisner(lp(3), 4.0, 2.0, m3, cfg), StructureError);
}

TEST_CASE("maximal pairs", "[theorems]") {
  const SolverConfig cfg;
  CHECK(all_pass(check_maximal_pair(lp(4), lp(4), 2.0, WeightedModel::unit(3), cfg, 3)));
  // l3 and l3 are not a maximal pair for p = 2
  const auto no = check_maximal_pair(lp(3), lp(3), 2.0, WeightedModel::unit(3), cfg, 3);
  REQUIRE(no.size() == 1);
  CHECK_FALSE(no[0].pass);
}

TEST_CASE("Bennett factorization", "[theorems]") {
  const SolverConfig cfg;
  CHECK(all_pass(check_bennett(WeightSeq({1.0, 0.5, 0.25}), 2.0, cfg, 2)));
  CHECK(all_pass(check_bennett(WeightSeq({1.0, 1.0, 1.0}), 1.0, cfg, 2)));
}

TEST_CASE("matrix domains", "[theorems]") {
  const SolverConfig cfg;
  CHECK(all_pass(check_matrix_domain(lower_triangular_ones(3), 2.0, cfg, 2)));
}

TEST_CASE("suites are deterministic for a fixed seed", "[theorems]") {
  SolverConfig cfg;
  cfg.seed = 7;
  const auto a = to_json(run_suite("lozanovskii", cfg)).dump();
  const auto b = to_json(run_suite("lozanovskii", cfg)).dump();
  CHECK(a == b);
  CHECK_THROWS_AS(run_suite("nope", cfg), StructureError);
  CHECK(suite_ids().size() == 12);
}

TEST_CASE("report formats", "[report]") {
  CheckReport r;
  r.check_id = "demo";
  r.tolerance = 1e-3;
  r.record(2e-3, "(1,2)", 1.0, 1.002);
  r.record(1e-4, "(3,4)", 1.0, 1.0001);
  r.finish();
  CHECK(r.instances == 2);
  CHECK_FALSE(r.pass);
  CHECK(r.max_rel_deviation == 2e-3);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].input == "(1,2)");
  const auto j = to_json({r});
  CHECK(j["version"] == 1);
  CHECK(j["checks"][0]["id"] == "demo");
  CHECK(j["checks"][0]["pass"] == false);
  CHECK_FALSE(j["checks"][0].contains("runtime"));
  CHECK(to_json({r}, true)["checks"][0].contains("runtime"));
  CHECK(to_csv({r}).rfind("id,instances,max_rel_deviation,tolerance,pass,witnesses\n", 0) == 0);
  CHECK(to_text({r}).rfind("FAIL demo", 0) == 0);
  CHECK_THAT(rel_dev(1.0, 1.0), Catch::Matchers::WithinAbs(0.0, 0.0));
}
