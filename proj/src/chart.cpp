#include "zform/chart.hpp"
#include "zform/parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zform {

bool Chart::metric_is_constant() const {
  for (const auto &row : metric)
    for (const auto &e : row)
      if (!e.is_number()) return false;
  return true;
}

namespace {

std::vector<std::vector<Expr>> zero_metric(int D) {
  return std::vector<std::vector<Expr>>(D, std::vector<Expr>(D, Expr::integer(0)));
}

std::vector<std::pair<double, double>> uniform_box(int D, double lo, double hi) {
  return std::vector<std::pair<double, double>>(D, {lo, hi});
}

ChartPtr make_schwarzschild() {
  auto c = std::make_shared<Chart>();
  c->name = "schwarzschild";
  c->dim = 4;
  c->coords = {"t", "r", "th", "ph"};
  c->param_names = {"M"};
  c->param_defaults = {{"M", 1.0}};
  c->metric = zero_metric(4);
  auto e = [&](const std::string &s) { return parse_expr(s, c->coords, c->param_names); };
  c->metric[0][0] = e("-(1 - 2*M/r)");
  c->metric[1][1] = e("1/(1 - 2*M/r)");
  c->metric[2][2] = e("r^2");
  c->metric[3][3] = e("r^2*sin(th)^2");
  c->validity = e("r - 2*M");
  c->box = {{-1.0, 1.0}, {3.0, 10.0}, {0.3, 2.8}, {0.1, 3.0}};
  return c;
}

ChartPtr make_de_sitter() {
  auto c = std::make_shared<Chart>();
  c->name = "de-sitter-flat-slicing";
  c->dim = 4;
  c->coords = {"t", "x", "y", "z"};
  c->param_names = {"H"};
  c->param_defaults = {{"H", 0.7}};
  c->metric = zero_metric(4);
  auto e = [&](const std::string &s) { return parse_expr(s, c->coords, c->param_names); };
  c->metric[0][0] = e("-1");
  c->metric[1][1] = e("exp(2*H*t)");
  c->metric[2][2] = e("exp(2*H*t)");
  c->metric[3][3] = e("exp(2*H*t)");
  c->box = {{-1.0, 1.0}, {-2.0, 2.0}, {-2.0, 2.0}, {-2.0, 2.0}};
  return c;
}

ChartPtr make_two_sphere() {
  auto c = std::make_shared<Chart>();
  c->name = "two-sphere";
  c->dim = 2;
  c->coords = {"th", "ph"};
  c->param_names = {"r"};
  c->param_defaults = {{"r", 1.0}};
  c->metric = zero_metric(2);
  auto e = [&](const std::string &s) { return parse_expr(s, c->coords, c->param_names); };
  c->metric[0][0] = e("r^2");
  c->metric[1][1] = e("r^2*sin(th)^2");
  c->box = {{0.3, 2.8}, {0.1, 3.0}};
  return c;
}

} // namespace

ChartPtr minkowski_chart(int D, bool mostly_plus) {
  auto c = std::make_shared<Chart>();
  c->name = "minkowski" + std::to_string(D);
  c->dim = D;
  for (int i = 0; i < D; ++i) c->coords.push_back("x" + std::to_string(i));
  c->metric = zero_metric(D);
  for (int i = 0; i < D; ++i) {
    int s = (i == 0) ? -1 : 1;
    if (!mostly_plus) s = -s;
    c->metric[i][i] = Expr::integer(s);
  }
  c->box = uniform_box(D, -2.0, 2.0);
  return c;
}

std::vector<ChartPtr> builtin_charts() {
  static const std::vector<ChartPtr> charts = {
      minkowski_chart(2), minkowski_chart(4), minkowski_chart(5),
      make_schwarzschild(), make_de_sitter(), make_two_sphere()};
  return charts;
}

ChartPtr find_chart(const std::string &name) {
  std::string key = (name == "minkowski") ? "minkowski4" : name;
  for (const auto &c : builtin_charts())
    if (c->name == key) return c;
  return nullptr;
}

// ---- spacetime file format --------------------------------------------

namespace {

std::string trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

} // namespace

ChartPtr parse_spacetime(std::istream &in, const std::string &filename) {
  auto chart = std::make_shared<Chart>();
  // raw assignments kept so metric/validity parse after coords are known
  struct Entry { int line; std::string key, value; };
  std::vector<Entry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw spacetime_file_error(filename, lineno, "expected key = value");
    entries.push_back({lineno, trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
  }

  chart->dim = -1;
  for (const auto &e : entries) {
    if (e.key == "name") chart->name = e.value;
    else if (e.key == "dim") {
      try { chart->dim = std::stoi(e.value); }
      catch (...) { throw spacetime_file_error(filename, e.line, "bad dim"); }
    } else if (e.key == "coords") {
      chart->coords = split(e.value, ',');
    } else if (e.key.starts_with("param.")) {
      std::string id = e.key.substr(6);
      chart->param_names.push_back(id);
      try { chart->param_defaults[id] = std::stod(e.value); }
      catch (...) { throw spacetime_file_error(filename, e.line, "bad parameter default"); }
    }
  }
  if (chart->name.empty()) chart->name = filename;
  if (chart->dim <= 0)
    throw spacetime_file_error(filename, 0, "missing or invalid dim");
  if (static_cast<int>(chart->coords.size()) != chart->dim)
    throw spacetime_file_error(filename, 0, "dim does not match number of coords");

  chart->metric = std::vector<std::vector<Expr>>(
      chart->dim, std::vector<Expr>(chart->dim, Expr::integer(0)));
  std::vector<std::vector<bool>> given(chart->dim, std::vector<bool>(chart->dim, false));
  chart->box = std::vector<std::pair<double, double>>(chart->dim, {0.5, 2.0});

  for (const auto &e : entries) {
    if (e.key.starts_with("g.")) {
      auto parts = split(e.key, '.');
      if (parts.size() != 3)
        throw spacetime_file_error(filename, e.line, "metric key must be g.<i>.<j>");
      int i, j;
      try { i = std::stoi(parts[1]); j = std::stoi(parts[2]); }
      catch (...) { throw spacetime_file_error(filename, e.line, "bad metric indices"); }
      if (i < 0 || j < 0 || i >= chart->dim || j >= chart->dim)
        throw spacetime_file_error(filename, e.line, "metric index out of range");
      Expr g;
      try { g = parse_expr(e.value, chart->coords, chart->param_names); }
      catch (const parse_error &pe) {
        throw spacetime_file_error(filename, e.line, std::string("metric entry: ") + pe.what());
      }
      if (given[i][j] && !(chart->metric[i][j] == g))
        throw spacetime_file_error(filename, e.line, "conflicting symmetric metric entries");
      chart->metric[i][j] = g;
      chart->metric[j][i] = g; // symmetric entries auto-mirrored
      given[i][j] = given[j][i] = true;
    } else if (e.key == "valid") {
      try { chart->validity = parse_expr(e.value, chart->coords, chart->param_names); }
      catch (const parse_error &pe) {
        throw spacetime_file_error(filename, e.line, std::string("valid: ") + pe.what());
      }
    } else if (e.key.starts_with("box.")) {
      std::string coordName = e.key.substr(4);
      auto it = std::find(chart->coords.begin(), chart->coords.end(), coordName);
      if (it == chart->coords.end())
        throw spacetime_file_error(filename, e.line, "box for unknown coordinate '" + coordName + "'");
      auto vals = split(e.value, ',');
      if (vals.size() != 2)
        throw spacetime_file_error(filename, e.line, "box needs two values \"lo,hi\"");
      try {
        chart->box[it - chart->coords.begin()] = {std::stod(vals[0]), std::stod(vals[1])};
      } catch (...) {
        throw spacetime_file_error(filename, e.line, "bad box bounds");
      }
    }
  }
  return chart;
}

ChartPtr load_spacetime_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spacetime file: " + path);
  return parse_spacetime(in, path);
}

} // namespace zform
