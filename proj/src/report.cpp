#include "zform/report.hpp"

#include <algorithm>
#include <sstream>

namespace zform {

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord &c) { return c.pass; });
}

void CheckReport::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord &a, const CheckRecord &b) { return a.name < b.name; });
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["chart"] = chart;
  j["seed"] = seed;
  j["points"] = points;
  j["tolerance"] = tolerance;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["mode"] = c.mode;
    cj["maxResidual"] = c.max_residual;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass;
    if (!c.reason.empty()) cj["reason"] = c.reason;
    j["checks"].push_back(std::move(cj));
  }
  j["pass"] = all_pass();
  return j;
}

std::string CheckReport::human_summary() const {
  std::ostringstream out;
  int passed = 0;
  for (const auto &c : checks)
    if (c.pass) ++passed;
  out << "suite " << suite << " on " << chart << ": " << passed << "/"
      << checks.size() << " checks passed";
  out << " (" << duration_seconds << "s)";
  if (!all_pass()) {
    out << "\nfailed:";
    for (const auto &c : checks)
      if (!c.pass) {
        out << "\n  " << c.name << " residual=" << c.max_residual
            << " tol=" << c.tolerance;
        if (!c.reason.empty()) out << " (" << c.reason << ")";
      }
  }
  return out.str();
}

} // namespace zform
