#include "zform/chart.hpp"

#include <doctest.h>
#include <sstream>

using namespace zform;

TEST_CASE("catalog contents") {
  auto charts = builtin_charts();
  auto has = [&](const std::string &n) {
    for (const auto &c : charts)
      if (c->name == n) return true;
    return false;
  };
  CHECK(has("minkowski2"));
  CHECK(has("minkowski4"));
  CHECK(has("minkowski5"));
  CHECK(has("schwarzschild"));
  CHECK(has("de-sitter-flat-slicing"));
  CHECK(has("two-sphere"));
  CHECK(find_chart("minkowski") == find_chart("minkowski4"));
  CHECK(find_chart("nope") == nullptr);
}

TEST_CASE("minkowski is mostly-plus") {
  ChartPtr c = minkowski_chart(4);
  auto params = c->default_params();
  std::vector<double> x = {1, 1, 1, 1};
  CHECK(c->metric[0][0].eval(x, params) == -1.0);
  for (int i = 1; i < 4; ++i) CHECK(c->metric[i][i].eval(x, params) == 1.0);
  CHECK(c->metric[0][1].is_zero());
  CHECK(c->metric_is_constant());
  CHECK(!find_chart("schwarzschild")->metric_is_constant());
}

TEST_CASE("schwarzschild metric values") {
  ChartPtr c = find_chart("schwarzschild");
  auto params = c->default_params();
  REQUIRE(params.count("M"));
  std::vector<double> x = {0.0, 4.0, 1.0, 1.0}; // t, r, theta, phi with M = 1
  CHECK(c->metric[0][0].eval(x, params) == doctest::Approx(-0.5)); // -(1 - 2M/r)
  CHECK(c->metric[1][1].eval(x, params) == doctest::Approx(2.0));
  CHECK(c->metric[2][2].eval(x, params) == doctest::Approx(16.0));
}

TEST_CASE("spacetime file parsing") {
  std::istringstream in(R"(# comment
name = demo
dim = 2
coords = u,v
param.k = 2.5
g.0.0 = 1 + k*u
g.0.1 = u*v
valid = u - 0.1
box.u = 1.0,3.0
)");
  ChartPtr c = parse_spacetime(in, "demo.spacetime");
  CHECK(c->name == "demo");
  CHECK(c->dim == 2);
  CHECK(c->coords == std::vector<std::string>{"u", "v"});
  CHECK(c->param_defaults.at("k") == 2.5);
  // symmetric mirroring
  CHECK(c->metric[1][0] == c->metric[0][1]);
  CHECK(c->metric[1][1].is_zero()); // unset entries default to 0
  CHECK(c->validity.has_value());
  CHECK(c->box[0] == std::pair<double, double>{1.0, 3.0});
  CHECK(c->box[1] == std::pair<double, double>{0.5, 2.0}); // default window
}

TEST_CASE("spacetime file errors carry file and line") {
  auto expect_error = [](const std::string &text, const std::string &needle) {
    std::istringstream in(text);
    try {
      parse_spacetime(in, "f");
      FAIL("expected spacetime_file_error");
    } catch (const spacetime_file_error &e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("name demo\n", "expected key = value");
  expect_error("dim = 2\ncoords = u,v\ng.3.3 = 1\n", "index");
  expect_error("dim = 2\ncoords = u\n", "coords");
  expect_error("dim = 2\ncoords = u,v\ng.0.1 = u\ng.1.0 = v\n", "conflict");
}
