#include "zform/oracles.hpp"
#include "zform/parser.hpp"
#include "zform/sampling.hpp"

#include <cmath>
#include <doctest.h>

using namespace zform;

TEST_CASE("symbolic determinant and inverse") {
  Expr x = Expr::coord(0);
  ExprMatrix m = {{x, Expr::integer(1)}, {Expr::integer(1), x}};
  CHECK(determinant(m) == x * x - Expr::integer(1));
  ExprMatrix inv = symbolic_inverse(m);
  // m * inv = identity
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Expr e = Expr::integer(0);
      for (int k = 0; k < 2; ++k) e = e + m[i][k] * inv[k][j];
      CHECK(zero_test(e - Expr::integer(i == j ? 1 : 0), 1, {}) !=
            ZeroDecision::NonZero);
    }
  ExprMatrix sing = {{x, x}, {x, x}};
  CHECK_THROWS_AS(symbolic_inverse(sing), std::invalid_argument);
}

TEST_CASE("schwarzschild christoffels at r = 4, M = 1") {
  GeometryCache cache = christoffel(find_chart("schwarzschild"));
  auto params = cache.chart->default_params();
  std::vector<double> x = {0.0, 4.0, 1.2, 0.3}; // t r theta phi
  // Gamma^r_tt = M (r - 2M) / r^3 ; Gamma^t_tr = M / (r (r - 2M))
  CHECK(cache.christoffel[1][0][0].eval(x, params) == doctest::Approx(0.03125));
  CHECK(cache.christoffel[0][0][1].eval(x, params) == doctest::Approx(0.125));
  // Gamma^r_rr = -M / (r (r - 2M))
  CHECK(cache.christoffel[1][1][1].eval(x, params) == doctest::Approx(-0.125));
  // Gamma^r_thth = -(r - 2M)
  CHECK(cache.christoffel[1][2][2].eval(x, params) == doctest::Approx(-2.0));
  // symmetric in the lower pair
  CHECK(cache.christoffel[0][1][0].eval(x, params) == doctest::Approx(0.125));
}

TEST_CASE("two-sphere curvature in closed form") {
  GeometryCache cache = geometry_cache(find_chart("two-sphere"));
  auto params = cache.chart->default_params();
  double r = params.at("r");
  for (double theta : {0.7, 1.1, 2.0}) {
    std::vector<double> x = {theta, 0.4};
    double s = std::sin(theta), c = std::cos(theta);
    // Gamma^theta_phiphi = -sin cos, Gamma^phi_thetaphi = cot
    CHECK(cache.christoffel[0][1][1].eval(x, params) == doctest::Approx(-s * c));
    CHECK(cache.christoffel[1][0][1].eval(x, params) == doctest::Approx(c / s));
    // R^theta_phithetaphi = sin^2 theta, scalar curvature 2 / r^2
    CHECK(cache.riemann[0][1][0][1].eval(x, params) == doctest::Approx(s * s));
    CHECK(cache.scalar.eval(x, params) == doctest::Approx(2.0 / (r * r)));
  }
}

TEST_CASE("de sitter is einstein with Ricci = 3 H^2 g") {
  ChartPtr c = find_chart("de-sitter-flat-slicing");
  GeometryCache cache = geometry_cache(c);
  auto params = c->default_params();
  double H = params.at("H");
  for (const auto &x : sample_points(*c, 3, 8)) {
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double ric = cache.ricci[m][n].eval(x, params);
        double g = c->metric[m][n].eval(x, params);
        CHECK(ric == doctest::Approx(3 * H * H * g).epsilon(1e-10));
      }
    CHECK(cache.scalar.eval(x, params) == doctest::Approx(12 * H * H));
  }
}

TEST_CASE("schwarzschild is ricci flat") {
  GeometryCache cache = geometry_cache(find_chart("schwarzschild"));
  auto params = cache.chart->default_params();
  for (const auto &x : sample_points(*cache.chart, 5, 8))
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        CHECK(std::abs(cache.ricci[m][n].eval(x, params)) < 1e-10);
}

TEST_CASE("finite-difference oracles agree with the symbolic cache") {
  for (const char *name : {"schwarzschild", "two-sphere", "de-sitter-flat-slicing"}) {
    ChartPtr c = find_chart(name);
    GeometryCache cache = geometry_cache(c);
    auto params = c->default_params();
    int D = c->dim;
    for (const auto &x : sample_points(*c, 9, 4)) {
      auto G = fd_christoffel(*c, x);
      auto R = fd_riemann(*c, x);
      for (int r = 0; r < D; ++r)
        for (int n = 0; n < D; ++n)
          for (int m = 0; m < D; ++m) {
            CHECK(cache.christoffel[r][n][m].eval(x, params) ==
                  doctest::Approx(G[r][n][m]).epsilon(1e-6));
            for (int s = 0; s < D; ++s)
              CHECK(cache.riemann[r][n][m][s].eval(x, params) ==
                    doctest::Approx(R[r][n][m][s]).epsilon(1e-5).scale(1.0));
          }
    }
  }
}

TEST_CASE("flat charts have vanishing christoffels") {
  GeometryCache cache = geometry_cache(minkowski_chart(4));
  for (int r = 0; r < 4; ++r)
    for (int n = 0; n < 4; ++n)
      for (int m = 0; m < 4; ++m) CHECK(cache.christoffel[r][n][m].is_zero());
  CHECK(cache.scalar.is_zero());
}

TEST_CASE("user-supplied chart runs through the full geometry stack") {
  ChartPtr c = load_spacetime_file(std::string(TEST_DATA_DIR) + "/weak-field.spacetime");
  GeometryCache cache = geometry_cache(c);
  auto params = c->default_params();
  for (const auto &x : sample_points(*c, 13, 4)) {
    auto G = fd_christoffel(*c, x);
    for (int r = 0; r < 3; ++r)
      for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m)
          CHECK(cache.christoffel[r][n][m].eval(x, params) ==
                doctest::Approx(G[r][n][m]).epsilon(1e-6));
  }
}
