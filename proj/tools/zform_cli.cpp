#include "zform/suites.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

using namespace zform;

int main(int argc, char **argv) {
  CLI::App app{"Z2^n-graded form calculus check harness"};
  app.require_subcommand(0, 1);

  auto *check = app.add_subcommand("check", "run a named check suite");
  std::string suite, spacetime = "minkowski4", jsonPath;
  uint64_t seed = 7;
  int points = 32;
  double tol = 1e-9;
  bool list = false;
  check->add_option("suite", suite, "suite name");
  check->add_option("--spacetime", spacetime, "catalog chart name or spacetime file");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--points", points, "sample points per pointwise check");
  check->add_option("--tol", tol, "pointwise tolerance");
  check->add_option("--json", jsonPath, "also write the JSON report to this file");
  check->add_flag("--list", list, "list suites and catalog charts");

  CLI11_PARSE(app, argc, argv);

  if (!check->parsed()) {
    std::cerr << app.help() << "\n";
    return 2;
  }
  if (list) {
    std::cout << "suites:\n";
    for (const auto &s : suite_names()) std::cout << "  " << s << "\n";
    std::cout << "charts:\n";
    for (const auto &c : builtin_charts()) std::cout << "  " << c->name << "\n";
    return 0;
  }
  if (suite.empty()) {
    std::cerr << "error: missing suite name (try --list)\n";
    return 2;
  }

  try {
    ChartPtr chart = find_chart(spacetime);
    if (!chart) chart = load_spacetime_file(spacetime);

    SuiteOptions opt;
    opt.seed = seed;
    opt.points = points;
    opt.tol = tol;

    auto t0 = std::chrono::steady_clock::now();
    CheckReport report = run_suite(suite, chart, opt);
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string doc = report.to_json().dump(2);
    std::cout << doc << "\n";
    if (!jsonPath.empty()) {
      std::ofstream out(jsonPath);
      if (!out) {
        std::cerr << "error: cannot write " << jsonPath << "\n";
        return 2;
      }
      out << doc << "\n";
    }
    std::cerr << report.human_summary() << "\n";
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
