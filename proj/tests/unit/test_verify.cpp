#include <doctest.h>

#include <algorithm>

#include "wphase/errors.hpp"
#include "wphase/verify.hpp"

using namespace wphase;

TEST_CASE("suites and registry") {
  CHECK(suite_names().front() == "all");
  const auto all = checks_in_suite("all");
  CHECK(all.size() == default_tolerances().size());
  for (const auto& suite : suite_names()) {
    if (suite == "all") continue;
    const auto names = checks_in_suite(suite);
    CHECK_FALSE(names.empty());
    for (const auto& n : names) CHECK(std::find(all.begin(), all.end(), n) != all.end());
  }
  CHECK(checks_in_suite("completeness") == std::vector<std::string>{"completeness"});
  CHECK_THROWS_AS(checks_in_suite("nope"), DomainError);
}

TEST_CASE("completeness check at dim 16") {
  VerifyConfig cfg;
  cfg.suite = "completeness";
  cfg.dim = 16;
  const auto rep = run_verify(cfg);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].pass);
  CHECK(rep.checks[0].max_defect < 1e-12);
  CHECK(rep.all_pass());
  const auto j = rep.to_json();
  CHECK(j["completeness"]["pass"].get<bool>());
  CHECK(j["completeness"].contains("seconds"));
  CHECK(j["completeness"]["tolerance"].get<double>() == 1e-12);
}

TEST_CASE("tolerance overrides and validation") {
  VerifyConfig cfg;
  cfg.tolerance_overrides["non_idempotence"] = 1e6;
  const auto res = run_check("non_idempotence", cfg);
  CHECK(res.tolerance == 1e6);
  CHECK(res.direction == "min");
  CHECK_FALSE(res.pass);

  cfg.tolerance_overrides = {{"no_such_check", 1.0}};
  CHECK_THROWS_AS(run_verify(cfg), DomainError);
  cfg.tolerance_overrides.clear();
  cfg.dim = 65;
  CHECK_THROWS_AS(run_verify(cfg), DomainError);
}

TEST_CASE("report-only checks never decide the verdict") {
  VerifyConfig cfg;
  cfg.suite = "zm";
  const auto rep = run_verify(cfg);
  REQUIRE(rep.checks.size() == 3);
  for (const auto& c : rep.checks) CHECK(c.report_only);
  CHECK(rep.all_pass());
  const auto j = rep.to_json();
  CHECK(j["zm_norm"]["details"]["discrepancy_flagged"].get<bool>());
  const auto& weights = j["unity_constant"]["details"]["weights"];
  REQUIRE(weights.size() == 2);
  CHECK_FALSE(weights[0]["proportional_to_identity"].get<bool>());
  CHECK(weights[1]["proportional_to_identity"].get<bool>());
  CHECK(weights[1]["constant_over_pi"].get<double>() == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("reports are deterministic without timing") {
  VerifyConfig cfg;
  cfg.suite = "weakequiv";
  cfg.record_timing = false;
  CHECK(run_verify(cfg).to_json().dump() == run_verify(cfg).to_json().dump());
}

TEST_CASE("check failures are captured in the report") {
  VerifyConfig cfg;
  cfg.dim = 41;
  const auto res = run_check("oracle_elements", cfg);
  CHECK_FALSE(res.pass);
  CHECK(res.details.contains("error"));
}
