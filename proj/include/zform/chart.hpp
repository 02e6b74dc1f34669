#ifndef ZFORM_CHART_HPP
#define ZFORM_CHART_HPP

#include "zform/expr.hpp"

#include <iosfwd>
#include <memory>
#include <optional>

namespace zform {

/// Single coordinate chart: dimension, coordinate names, metric component
/// expressions, parameter bindings, and a sampling region for pointwise
/// checks.
struct Chart {
  std::string name;
  int dim = 0;
  std::vector<std::string> coords;
  std::vector<std::string> param_names;
  std::map<std::string, double> param_defaults;
  std::vector<std::vector<Expr>> metric; // dim x dim, symmetric
  std::optional<Expr> validity;          // must evaluate > 0 at admitted points
  std::vector<std::pair<double, double>> box; // per-coordinate sampling range

  bool metric_is_constant() const;
  std::map<std::string, double> default_params() const { return param_defaults; }
};

using ChartPtr = std::shared_ptr<const Chart>;

/// Minkowski chart in D dimensions; mostly-plus signature (-,+,...,+) by
/// default.
ChartPtr minkowski_chart(int D, bool mostly_plus = true);

/// Built-in chart catalog: minkowski2/4/5, schwarzschild,
/// de-sitter-flat-slicing, two-sphere.
std::vector<ChartPtr> builtin_charts();

/// Lookup by catalog name; "minkowski" aliases minkowski4. Returns nullptr
/// when absent.
ChartPtr find_chart(const std::string &name);

struct spacetime_file_error : std::runtime_error {
  spacetime_file_error(const std::string &file, int line, const std::string &msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
};

/// Parse the line-oriented key=value spacetime description format.
ChartPtr parse_spacetime(std::istream &in, const std::string &filename);
ChartPtr load_spacetime_file(const std::string &path);

} // namespace zform

#endif
