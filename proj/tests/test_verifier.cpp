// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pqml/verifier.hpp"

using namespace pqml;

namespace {

VerifyConfig quick_config() {
  VerifyConfig cfg = VerifyConfig::defaults();
  cfg.identities = {"thm-3.4"};
  return cfg;
}

std::string write_temp(const std::string& text) {
  static int counter = 0;
  std::string path = "pqml_test_config_" + std::to_string(counter++) + ".json";
  std::ofstream os(path);
  os << text;
  return path;
}

}  // namespace

TEST_CASE("suite reports are deterministic") {
  auto r1 = run_full_suite(quick_config());
  auto r2 = run_full_suite(quick_config());
  CHECK(report_to_json(r1) == report_to_json(r2));
}

TEST_CASE("report integrity invariants") {
  VerifyConfig cfg = VerifyConfig::defaults();
  cfg.identities = {"thm-3.4", "thm-3.5-corrected", "thm-3.5-as-printed"};
  auto reports = run_full_suite(cfg);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.pass == (r.max_rel_err <= r.tolerance));
    CHECK(r.median_rel_err <= r.max_rel_err);
    CHECK(r.grid_size > 0);
  }
}

TEST_CASE("single-identity selection yields exactly one report") {
  auto reports = run_full_suite(quick_config());
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].identity_id == "thm-3.4");
}

TEST_CASE("as-printed reports never gate the outcome") {
  std::vector<IdentityReport> reports(2);
  reports[0].identity_id = "thm-3.5-corrected";
  reports[0].pass = true;
  reports[1].identity_id = "thm-3.5-as-printed";
  reports[1].pass = false;
  CHECK(all_corrected_pass(reports));
  reports[0].pass = false;
  CHECK_FALSE(all_corrected_pass(reports));
}

TEST_CASE("seeded random tuples are reproducible") {
  VerifyConfig cfg = VerifyConfig::defaults();
  cfg.identities = {"cor-2.4"};
  cfg.grid.alpha = {1.0};
  cfg.grid.beta = {1.0};
  cfg.grid.pq = {{0.25, 0.5}};
  cfg.grid.z = {0.5};
  cfg.grid.seed = 99;
  cfg.grid.random_tuples = 5;
  auto r1 = run_full_suite(cfg);
  auto r2 = run_full_suite(cfg);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].grid_size == 6);
  CHECK(report_to_json(r1) == report_to_json(r2));
}

TEST_CASE("config loading") {
  SUBCASE("missing file") {
    CHECK_THROWS_AS(VerifyConfig::load("definitely_missing.json"), std::runtime_error);
  }
  SUBCASE("empty file gives defaults") {
    auto path = write_temp("  \n");
    auto cfg = VerifyConfig::load(path);
    CHECK(cfg.grid.alpha == GridSpec::defaults().alpha);
    CHECK(cfg.series.rel_tol == SeriesConfig{}.rel_tol);
    std::remove(path.c_str());
  }
  SUBCASE("partial override keeps other defaults") {
    auto path = write_temp(R"({"series": {"rel_tol": 1e-10}})");
    auto cfg = VerifyConfig::load(path);
    CHECK(cfg.series.rel_tol == 1e-10);
    CHECK(cfg.series.max_terms == SeriesConfig{}.max_terms);
    CHECK(cfg.grid.z == GridSpec::defaults().z);
    std::remove(path.c_str());
  }
  SUBCASE("empty grid list is an error") {
    auto path = write_temp(R"({"grid": {"alpha": []}})");
    CHECK_THROWS_WITH_AS(VerifyConfig::load(path),
                         "config: field 'grid.alpha': expected non-empty array of numbers",
                         std::runtime_error);
    std::remove(path.c_str());
  }
  SUBCASE("unknown field is diagnosed by name") {
    auto path = write_temp(R"({"grid": {"alfa": [1.0]}})");
    try {
      VerifyConfig::load(path);
      FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("grid.alfa") != std::string::npos);
    }
    std::remove(path.c_str());
  }
  SUBCASE("unknown tolerance key is rejected") {
    auto path = write_temp(R"({"tolerances": {"thm-9.9": 1e-5}})");
    CHECK_THROWS_AS(VerifyConfig::load(path), std::runtime_error);
    std::remove(path.c_str());
  }
  SUBCASE("identity selection parses") {
    auto path = write_temp(R"({"identities": ["cor-2.4"], "quad": {"scheme": "adaptive"}})");
    auto cfg = VerifyConfig::load(path);
    REQUIRE(cfg.identities.size() == 1);
    CHECK(cfg.identities[0] == "cor-2.4");
    CHECK(cfg.quad.scheme == QuadScheme::adaptive);
    std::remove(path.c_str());
  }
}

TEST_CASE("report serialization") {
  IdentityReport r;
  r.identity_id = "thm-2.1";
  r.grid_size = 3;
  r.max_rel_err = 1.0 / 3.0;
  r.median_rel_err = 0.25;
  r.tolerance = 1e-8;
  r.pass = false;
  r.notes = "quote \" and backslash \\";
  std::string js = report_to_json({r});
  CHECK(js.find("0.33333333333333331") != std::string::npos);  // 17 significant digits
  CHECK(js.find("\\\"") != std::string::npos);
  CHECK(js.find("\"pass\": false") != std::string::npos);

  std::string summary = format_summary({r});
  CHECK(summary.find("thm-2.1") != std::string::npos);
  CHECK(summary.find("FAIL") != std::string::npos);
}

TEST_CASE("single-report experiment wrappers") {
  GridSpec g;  // trimmed grid keeps this case fast
  g.alpha = {1.0};
  g.beta = {1.0, 1.5};
  g.pq = {{0.0, 0.0}, {0.25, 1.0}};
  g.z = {-0.5, 0.5};
  g.red_alpha = {1.0};
  g.red_beta = {1.0, 1.5};
  g.red_p = {0.0, 0.5};
  g.red_z = {0.5};
  g.mellin_ab = {{1.0, 1.0}, {0.5, 1.2}};
  g.mellin_gc = {{1.2, 2.5}};
  g.mellin_z = {0.0, 0.25};
  g.diag_check_tuples = 1;
  g.delta = {1.0};
  g.lambda = {2.0};
  g.pq34 = {{0.3, 0.6}};
  g.deriv_ab = {{1.0, 1.5}};
  g.deriv_pq = {{0.2, 0.4}};
  g.deriv_z = {0.6};
  g.deriv_mu = {1.0};

  auto red = verify_reduction_chain(g, 1e-10);
  CHECK(red.identity_id == "remark-1.1");
  CHECK(red.pass);
  CHECK(red.grid_size == 4);

  auto reps = verify_integral_reps(g, 1e-8);
  CHECK(reps.identity_id == "thm-2.1");
  CHECK(reps.pass);  // pairwise max over all four routes
  CHECK(reps.grid_size == 8);
  CHECK(reps.notes.find("cor-2.2") != std::string::npos);
  CHECK(reps.notes.find("cor-2.3") != std::string::npos);

  auto rec = verify_recurrence(g, 1e-9);
  CHECK(rec.identity_id == "cor-2.4");
  CHECK(rec.pass);

  auto mel = verify_mellin(g, {{1.0, 1.0}, {1.5, 2.0}}, 1e-5);
  CHECK(mel.identity_id == "thm-2.5");
  CHECK(mel.pass);
  CHECK(mel.grid_size == 8);
  CHECK(mel.notes.find("as-printed") != std::string::npos);
  CHECK(mel.notes.find("cor-2.6/2.7") != std::string::npos);

  auto frac = verify_frac_theorem(g, 1e-6);
  CHECK(frac.identity_id == "thm-3.4");
  CHECK(frac.pass);
  CHECK(frac.grid_size == 1);

  auto der = verify_derivative_theorems(g, {1, 2}, 1e-8);
  CHECK(der.identity_id == "thm-3.5-corrected");
  CHECK(der.pass);
  CHECK(der.notes.find("thm-3.6") != std::string::npos);
  CHECK(der.notes.find("ratio") != std::string::npos);
}

TEST_CASE("tightening evaluator tolerances does not inflate identity errors") {
  VerifyConfig loose = VerifyConfig::defaults();
  loose.identities = {"thm-3.4"};
  loose.quad = de_quad_config(1e-10, 1e-13);
  VerifyConfig tight = loose;
  tight.quad = de_quad_config(1e-12, 1e-15);
  double e_loose = run_full_suite(loose).at(0).max_rel_err;
  double e_tight = run_full_suite(tight).at(0).max_rel_err;
  // Both runs sit far below the identity tolerance; tightening must not move
  // the measured error by more than the evaluators' own error budgets.
  CHECK(e_tight <= e_loose + 1e-9);
  CHECK(std::fabs(e_tight - e_loose) <= 1e-9);
}
