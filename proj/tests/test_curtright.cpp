#include "zform/multiform.hpp"
#include "zform/oracles.hpp"
#include "zform/sampling.hpp"

#include <doctest.h>

using namespace zform;

namespace {
ChartPtr chart5 = minkowski_chart(5);
AlgebraPtr alg = Algebra::biform(chart5);
} // namespace

TEST_CASE("pipeline validates its input") {
  AlgebraPtr alg4 = Algebra::biform(minkowski_chart(4));
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(curtright_pipeline(random_form(rng, alg4, {2, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(curtright_pipeline(random_form(rng, alg, {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("field strength matches the cyclic index formula") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 5; ++it) {
    Element C = random_form(rng, alg, {2, 1});
    CurtrightResult res = curtright_pipeline(C);
    CurtrightOracle o = curtright_oracle(C);
    for (int l = 0; l < 5; ++l)
      for (int m = l + 1; m < 5; ++m)
        for (int n = m + 1; n < 5; ++n)
          for (int r = 0; r < 5; ++r) {
            CHECK(component(res.F, {{l, m, n}, {r}}) == o.F[l][m][n][r]);
            for (int w = r + 1; w < 5; ++w)
              CHECK(component(res.E, {{l, m, n}, {r, w}}) == o.E[l][m][n][r][w]);
          }
  }
}

TEST_CASE("ricci and trace match the eta contraction") {
  std::mt19937_64 rng(43);
  Element C = random_form(rng, alg, {2, 1}, 4);
  CurtrightResult res = curtright_pipeline(C);
  CurtrightOracle o = curtright_oracle(C);
  for (int m = 0; m < 5; ++m)
    for (int n = m + 1; n < 5; ++n)
      for (int r = 0; r < 5; ++r)
        CHECK(component(res.ricci, {{m, n}, {r}}) == o.ricci[m][n][r]);
  for (int n = 0; n < 5; ++n) CHECK(component(res.trace, {{n}, {}}) == o.trace[n]);
}

TEST_CASE("oracle component arrays are block antisymmetric") {
  std::mt19937_64 rng(44);
  Element C = random_form(rng, alg, {2, 1});
  CurtrightOracle o = curtright_oracle(C);
  CHECK(o.C[1][0][2] == -o.C[0][1][2]);
  CHECK(o.C[3][3][2].is_zero());
  CHECK(o.F[2][1][0][4] == -o.F[1][2][0][4]);
  CHECK(o.E[0][1][2][4][3] == -o.E[0][1][2][3][4]);
}

TEST_CASE("E is invariant under gauge shifts") {
  std::mt19937_64 rng(45);
  for (int it = 0; it < 5; ++it) {
    Element C = random_form(rng, alg, {2, 1});
    Element a = random_form(rng, alg, {1, 1});
    Element b = random_form(rng, alg, {2, 0});
    Element Cg = C + de_rham(0, a) + de_rham(1, b);
    CurtrightResult r0 = curtright_pipeline(C);
    CurtrightResult r1 = curtright_pipeline(Cg);
    CHECK((r1.E - r0.E).structurally_zero());
    // F itself shifts only by the d10 part
    CHECK((r1.F - r0.F - de_rham(0, de_rham(1, b))).structurally_zero());
  }
}

TEST_CASE("constraint residual detects non-cyclic fields") {
  // a pure xi^0 xi^1 th^2 monomial violates the cyclic identity
  Element bad = Element::monomial(alg, {{0, 0}, {0, 1}, {1, 2}}, Expr::integer(1));
  CHECK(!curtright_pipeline(bad).constraintResidual.structurally_zero());
  // a combination whose full antisymmetrization cancels satisfies it:
  // C = xi^0 xi^1 th^2 + xi^1 xi^2 th^0 - 2 xi^2 xi^0 th^1
  Element cyc = Element::monomial(alg, {{0, 0}, {0, 1}, {1, 2}}, Expr::integer(1)) +
                Element::monomial(alg, {{0, 1}, {0, 2}, {1, 0}}, Expr::integer(1)) +
                Element::monomial(alg, {{0, 2}, {0, 0}, {1, 1}}, Expr::integer(-2));
  CHECK(curtright_pipeline(cyc).constraintResidual.structurally_zero());
}
