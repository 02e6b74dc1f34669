#ifndef ZFORM_REPORT_HPP
#define ZFORM_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

namespace zform {

struct CheckRecord {
  std::string name;
  std::string mode; // "exact" | "pointwise"
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string reason; // empty unless a check failed for a structural reason
};

/// Deterministic suite outcome. The JSON form is byte-identical for identical
/// inputs: fixed key order, checks sorted by name, no timing data (the
/// wall-clock duration is surfaced only in the human summary).
struct CheckReport {
  std::string suite;
  std::string chart;
  uint64_t seed = 0;
  int points = 0;
  double tolerance = 0.0;
  std::vector<CheckRecord> checks;
  double duration_seconds = 0.0; // excluded from to_json

  bool all_pass() const;
  void sort_checks();
  nlohmann::ordered_json to_json() const;
  std::string human_summary() const;
};

} // namespace zform

#endif
