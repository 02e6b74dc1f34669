#include "zform/multiform.hpp"
#include "zform/parser.hpp"
#include "zform/sampling.hpp"

#include <doctest.h>

using namespace zform;

namespace {
ChartPtr chart4 = minkowski_chart(4);
AlgebraPtr alg = Algebra::biform(chart4);

Element xi(int i) { return Element::coordinate(alg, 0, i); }
Element th(int i) { return Element::coordinate(alg, 1, i); }
Expr x(int i) { return Expr::coord(i); }
} // namespace

TEST_CASE("de Rham differential on a concrete monomial") {
  // d_(0,1)(f) = xi^mu d_mu f
  Element f = Element::scalar(alg, x(0) * x(1));
  Element d = de_rham(0, f);
  Element expect = xi(0).scaled(x(1)) + xi(1).scaled(x(0));
  CHECK((d - expect).structurally_zero());
  // d_(1,0) likewise with th
  Element d1 = de_rham(1, f);
  Element expect1 = th(0).scaled(x(1)) + th(1).scaled(x(0));
  CHECK((d1 - expect1).structurally_zero());
}

TEST_CASE("delta operator moves one index between blocks") {
  // Delta_(0,1) = xi^mu d/dth^mu : th^2 -> xi^2
  Element w = th(2).scaled(x(0));
  CHECK((delta_op(0, 1, w) - xi(2).scaled(x(0))).structurally_zero());
  // on a (1,1) monomial: xi^0 th^1 -> xi^0 xi^1 with the left-derivative sign
  Element m = xi(0) * th(1);
  CHECK((delta_op(0, 1, m) - xi(1) * xi(0)).structurally_zero());
}

TEST_CASE("multidegree") {
  Element w = xi(0) * xi(1) * th(2);
  auto md = multidegree(w);
  REQUIRE(md.has_value());
  CHECK(*md == std::vector<int>{2, 1});
  CHECK(!multidegree(xi(0) + th(0)).has_value());
}

TEST_CASE("eta inverse of the metric form is the dimension") {
  for (int D : {2, 4, 5}) {
    AlgebraPtr a = Algebra::biform(minkowski_chart(D));
    Element inv = eta_inverse_apply(metric_form(a));
    CHECK((inv - Element::scalar(a, Expr::integer(D))).structurally_zero());
  }
}

TEST_CASE("eta inverse requires a constant metric") {
  AlgebraPtr curved = Algebra::biform(find_chart("two-sphere"));
  CHECK_THROWS_AS(eta_inverse_apply(metric_form(curved)), std::invalid_argument);
}

TEST_CASE("interior product and Cartan's formula") {
  std::vector<Expr> X = {x(1), Expr::integer(1), Expr::integer(0), x(0)};
  // on scalars the Cartan formula reduces to the directional derivative
  Expr f = x(0) * x(0) * x(3);
  Element lf = lie_derivative(0, X, Element::scalar(alg, f));
  Expr expect = Expr::integer(0);
  for (int mu = 0; mu < 4; ++mu) expect = expect + X[mu] * f.diff(mu);
  CHECK((lf - Element::scalar(alg, expect)).structurally_zero());
  // the Lie derivative is an even derivation of the wedge product
  std::mt19937_64 rng(3);
  for (int it = 0; it < 10; ++it) {
    Element a = random_form(rng, alg, {1, 0});
    Element b = random_form(rng, alg, {1, 1});
    Element lhs = lie_derivative(0, X, a * b);
    Element rhs = lie_derivative(0, X, a) * b + a * lie_derivative(0, X, b);
    CHECK((lhs - rhs).structurally_zero());
  }
  // i_X on a one-form picks out the pairing
  Element one = xi(2).scaled(x(0));
  CHECK((interior_product(0, X, one)).structurally_zero()); // X^2 = 0
  Element one1 = xi(3).scaled(x(1));
  Element ip = interior_product(0, X, one1);
  CHECK((ip - Element::scalar(alg, x(0) * x(1))).structurally_zero());
}

TEST_CASE("poincare pullback preserves the flat metric form") {
  // boost in the (t, x1) plane with rapidity cosh = 5/4, sinh = 3/4
  std::vector<std::vector<double>> L = {{1.25, 0.75, 0, 0},
                                        {0.75, 1.25, 0, 0},
                                        {0, 0, 1, 0},
                                        {0, 0, 0, 1}};
  CHECK(is_lorentz(L, *chart4));
  Element g = metric_form(alg);
  Element back = poincare_pullback(g, L, {0.5, 0, 1.0, 0});
  CHECK((back - g).structurally_zero());
  // pullback is an algebra map on a product of forms
  std::mt19937_64 rng(9);
  Element a = random_form(rng, alg, {1, 0});
  Element b = random_form(rng, alg, {0, 1});
  Element lhs = poincare_pullback(a * b, L, {0, 0, 0, 0});
  Element rhs = poincare_pullback(a, L, {0, 0, 0, 0}) *
                poincare_pullback(b, L, {0, 0, 0, 0});
  CHECK((lhs - rhs).structurally_zero());
  // a non-Lorentz matrix is rejected by is_lorentz
  std::vector<std::vector<double>> S = {{2, 0, 0, 0},
                                        {0, 1, 0, 0},
                                        {0, 0, 1, 0},
                                        {0, 0, 0, 1}};
  CHECK(!is_lorentz(S, *chart4));
  // singular matrices throw
  std::vector<std::vector<double>> Z(4, std::vector<double>(4, 0.0));
  CHECK_THROWS_AS(poincare_pullback(g, Z, {0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("component extraction applies block permutation signs") {
  Element w = xi(0) * xi(1) * th(2);
  Expr c = component(w, {{0, 1}, {2}});
  Expr cswap = component(w, {{1, 0}, {2}});
  CHECK(c == -cswap);
  CHECK(component(w, {{0, 0}, {2}}).is_zero()); // repeated nilpotent index
}

TEST_CASE("form_from_components round-trips") {
  std::mt19937_64 rng(17);
  Element w = random_form(rng, alg, {2, 1}, 4);
  Element rebuilt = form_from_components(
      alg, {2, 1},
      [&](const std::vector<std::vector<int>> &blocks) { return component(w, blocks); });
  CHECK((rebuilt - w).structurally_zero());
}

TEST_CASE("components json round-trips and is canonical") {
  std::mt19937_64 rng(23);
  Element w = random_form(rng, alg, {1, 2}, 3);
  nlohmann::json j = components_json(w);
  Element back = element_from_components_json(alg, j);
  CHECK((back - w).structurally_zero());
  for (const auto &entry : j.at("components")) {
    auto idx = entry.at("indices");
    REQUIRE(idx.size() == 2);
    for (const auto &block : idx) {
      for (size_t i = 1; i < block.size(); ++i)
        CHECK(block[i - 1].get<int>() < block[i].get<int>());
    }
  }
}
