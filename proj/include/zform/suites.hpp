#ifndef ZFORM_SUITES_HPP
#define ZFORM_SUITES_HPP

#include "zform/oracles.hpp"
#include "zform/report.hpp"
#include "zform/sampling.hpp"

namespace zform {

struct SuiteOptions {
  uint64_t seed = 7;
  int points = 32;
  double tol = 1e-9;
  double fd_tol = 1e-6; // finite-difference oracle comparisons
  int forms = 10;       // random forms per property inside a suite
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string> &suite_names();

/// Executes the named suite on the chart. Throws std::invalid_argument for an
/// unknown suite or when the chart fails the suite's preconditions (e.g. the
/// curtright suite needs a 5-dimensional constant-metric chart).
CheckReport run_suite(const std::string &suite, const ChartPtr &chart,
                      const SuiteOptions &opt = {});

} // namespace zform

#endif
