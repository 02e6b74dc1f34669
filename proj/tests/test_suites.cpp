#include "zform/suites.hpp"

#include <doctest.h>

using namespace zform;

TEST_CASE("every suite passes on every applicable catalog chart") {
  SuiteOptions opt;
  opt.forms = 4; // keep the unit-test pass quick; acceptance uses full counts
  for (const auto &chart : builtin_charts()) {
    for (const auto &suite : suite_names()) {
      if (suite == "all") continue;
      if (suite == "curtright" && (chart->dim != 5 || !chart->metric_is_constant()))
        continue;
      CheckReport r = run_suite(suite, chart, opt);
      INFO(suite << " on " << chart->name << ": " << r.human_summary());
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("reports are deterministic and sorted") {
  SuiteOptions opt;
  opt.forms = 3;
  CheckReport a = run_suite("geometry", find_chart("two-sphere"), opt);
  CheckReport b = run_suite("geometry", find_chart("two-sphere"), opt);
  a.duration_seconds = 1.0; // timing must not leak into the document
  b.duration_seconds = 2.0;
  CHECK(a.to_json().dump() == b.to_json().dump());
  for (size_t i = 1; i < a.checks.size(); ++i)
    CHECK(a.checks[i - 1].name < a.checks[i].name);
}

TEST_CASE("report json has the fixed key order") {
  SuiteOptions opt;
  opt.forms = 2;
  CheckReport r = run_suite("flat-bicomplex", find_chart("minkowski2"), opt);
  std::string doc = r.to_json().dump();
  CHECK(doc.find("\"suite\"") < doc.find("\"chart\""));
  CHECK(doc.find("\"chart\"") < doc.find("\"seed\""));
  CHECK(doc.find("\"seed\"") < doc.find("\"points\""));
  CHECK(doc.find("\"points\"") < doc.find("\"tolerance\""));
  CHECK(doc.find("\"tolerance\"") < doc.find("\"checks\""));
  CHECK(doc.find("duration") == std::string::npos);
  auto j = r.to_json();
  for (const auto &c : j.at("checks")) {
    CHECK(c.contains("name"));
    CHECK(c.contains("mode"));
    CHECK(c.contains("maxResidual"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("pass"));
  }
}

TEST_CASE("the all suite prefixes sub-suite names and skips inapplicable ones") {
  SuiteOptions opt;
  opt.forms = 2;
  CheckReport r = run_suite("all", find_chart("minkowski2"), opt);
  CHECK(r.all_pass());
  bool sawPrefixed = false, sawCurtright = false;
  for (const auto &c : r.checks) {
    if (c.name.rfind("susy/", 0) == 0) sawPrefixed = true;
    if (c.name.rfind("curtright/", 0) == 0) sawCurtright = true;
  }
  CHECK(sawPrefixed);
  CHECK(!sawCurtright); // needs D = 5
  CheckReport r5 = run_suite("all", find_chart("minkowski5"), opt);
  bool saw5 = false;
  for (const auto &c : r5.checks)
    if (c.name.rfind("curtright/", 0) == 0) saw5 = true;
  CHECK(saw5);
}

TEST_CASE("unknown suites and charts are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite", find_chart("minkowski4"), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_suite("geometry", nullptr, {}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("curtright", find_chart("minkowski4"), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_suite("curtright", find_chart("schwarzschild"), {}),
                  std::invalid_argument);
}

TEST_CASE("the susy power check confirms the variation is visibly nonzero") {
  SuiteOptions opt;
  opt.forms = 3;
  CheckReport r = run_suite("susy", find_chart("two-sphere"), opt);
  for (const auto &c : r.checks)
    if (c.name == "susy-power") {
      CHECK(c.pass);
      CHECK(c.max_residual == 0.0);
    }
}
