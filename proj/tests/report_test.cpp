#include <doctest.h>

#include <sstream>

#include "holoform/report.hpp"
#include "holoform/suites.hpp"

using namespace holoform;

TEST_CASE("empty report serializes to valid JSON") {
  SuiteReport r;
  r.suite = "empty";
  r.seed = 0;
  r.samples = 0;
  std::string j = emit_report(r, ReportFormat::json);
  CHECK(j.find("\"checks\": []") != std::string::npos);
  SuiteReport back = parse_report_json(j);
  CHECK(back.suite == "empty");
  CHECK(back.checks.empty());
}

TEST_CASE("CSV layout") {
  SuiteReport r;
  r.suite = "demo";
  r.seed = 3;
  r.samples = 10;
  r.checks.push_back({"alpha", 1.25e-10, 1e-8, true});
  std::string csv = emit_report(r, ReportFormat::csv);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "suite,check,max_residual,tolerance,pass");
  CHECK(lines[1].rfind("demo,alpha,", 0) == 0);
  CHECK(lines[1].find("true") != std::string::npos);
}

TEST_CASE("JSON round trip") {
  SuiteReport r;
  r.suite = "demo";
  r.seed = 42;
  r.samples = 25;
  r.checks.push_back({"alpha", 1.23456789e-10, 1e-8, true});
  r.checks.push_back({"beta", 3.14159e-2, 1e-6, false});
  SuiteReport back = parse_report_json(emit_report(r, ReportFormat::json));
  CHECK(back.suite == r.suite);
  CHECK(back.seed == r.seed);
  CHECK(back.samples == r.samples);
  REQUIRE(back.checks.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(back.checks[i].name == r.checks[i].name);
    CHECK(back.checks[i].pass == r.checks[i].pass);
    // residuals are emitted with 6 significant digits
    CHECK(back.checks[i].max_residual ==
          doctest::Approx(r.checks[i].max_residual).epsilon(1e-5));
    CHECK(back.checks[i].tolerance == doctest::Approx(r.checks[i].tolerance).epsilon(1e-5));
  }
  CHECK(!back.overall_pass());
}

TEST_CASE("suite runs are deterministic") {
  SuiteConfig cfg;
  cfg.suite = "lie-identities";
  cfg.seed = 5;
  cfg.samples = 20;
  SuiteReport a = run_suite(cfg);
  SuiteReport b = run_suite(cfg);
  CHECK(emit_report(a, ReportFormat::json) == emit_report(b, ReportFormat::json));
  CHECK(a.overall_pass());
}

TEST_CASE("tolerance overrides flip the verdict, not the residual") {
  SuiteConfig cfg;
  cfg.suite = "lie-identities";
  cfg.seed = 5;
  cfg.samples = 20;
  SuiteReport base = run_suite(cfg);
  REQUIRE(!base.checks.empty());
  std::string first = base.checks[0].name;
  cfg.tolerance_overrides[first] = 1e-300;
  SuiteReport tight = run_suite(cfg);
  CHECK(tight.checks[0].max_residual == base.checks[0].max_residual);
  CHECK(!tight.checks[0].pass);
}

TEST_CASE("unknown suites are rejected") {
  SuiteConfig cfg;
  cfg.suite = "no-such-suite";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("registry is consistent") {
  auto names = suite_names();
  CHECK(names.size() == 8);  // 7 suites + "all"
  CHECK(names.back() == "all");
  int total = 0;
  for (const auto& [suite, checks] : suite_registry()) total += static_cast<int>(checks.size());
  CHECK(total == 55);
  CheckResult one = run_check("bracket-norm-identity", 1, 10);
  CHECK(one.pass);
}
