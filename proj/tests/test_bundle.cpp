#include "zform/sampling.hpp"
#include "zform/suites.hpp"

#include <doctest.h>

using namespace zform;

TEST_CASE("trivial connection reproduces the fiberwise covariant derivative") {
  ChartPtr c = find_chart("schwarzschild");
  AlgebraPtr alg = Algebra::bundle(c, 2);
  GeometryCache cache = geometry_cache(c);
  BundleConnection a0 = BundleConnection::trivial(c->dim, 2);
  std::mt19937_64 rng(4);
  for (int it = 0; it < 5; ++it) {
    Element w = random_form(rng, alg, {1, 1, 1});
    for (int s = 0; s < 2; ++s)
      CHECK((bundle_covariant_de_rham(s, w, cache, a0) -
             covariant_de_rham(s, w, cache))
                .structurally_zero());
  }
}

TEST_CASE("connection term on a bare section") {
  ChartPtr c = minkowski_chart(4);
  AlgebraPtr alg = Algebra::bundle(c, 2);
  GeometryCache cache = geometry_cache(c);
  int zs = alg->sector_by_degree(Degree{1, 1});
  REQUIRE(zs == 2);
  BundleConnection an = BundleConnection::trivial(4, 2);
  an.components[1][0][1] = Expr::coord(0); // (A_1)_0^1 = x^0
  Element z0 = Element::coordinate(alg, zs, 0);
  Element z1 = Element::coordinate(alg, zs, 1);
  // nabla_(0,1) z_0 = xi^1 (A_1)_0^1 z_1 on a flat chart
  Element got = bundle_covariant_de_rham(0, z0, cache, an);
  Element expect =
      (Element::coordinate(alg, 0, 1) * z1).scaled(Expr::coord(0));
  CHECK((got - expect).structurally_zero());
  // the other fiber direction has no connection term here
  CHECK(bundle_covariant_de_rham(0, z1, cache, an).structurally_zero());
  // and the th-sector derivative uses th^mu in the z term
  Element got10 = bundle_covariant_de_rham(1, z0, cache, an);
  Element expect10 =
      (Element::coordinate(alg, 1, 1) * z1).scaled(Expr::coord(0));
  CHECK((got10 - expect10).structurally_zero());
}

TEST_CASE("pure gauge connections carry no curvature") {
  for (const char *name : {"minkowski4", "two-sphere"}) {
    ChartPtr c = find_chart(name);
    AlgebraPtr alg = Algebra::bundle(c, 1);
    GeometryCache cache = geometry_cache(c);
    Expr phi = Expr::coord(0) * Expr::coord(1);
    BundleConnection ag = BundleConnection::pure_gauge(c, phi);
    VectorField nb = bundle_covariant_field(alg, 0, cache, ag);
    VectorField r01 = curvature_field(alg, CurvTag::R01, cache);
    Element two = Element::scalar(alg, Expr::integer(2));
    std::mt19937_64 rng(6);
    for (int it = 0; it < 4; ++it) {
      Element w = random_form(rng, alg, {1, 0, 1});
      Element resid = two * nb.apply(nb.apply(w)) - r01.apply(w);
      CHECK(element_zero(resid, 1e-9, 24, 99).zero);
    }
  }
}

TEST_CASE("a non-flat connection does produce curvature") {
  ChartPtr c = minkowski_chart(4);
  AlgebraPtr alg = Algebra::bundle(c, 1);
  GeometryCache cache = geometry_cache(c);
  BundleConnection a = BundleConnection::trivial(4, 1);
  a.components[1][0][0] = Expr::coord(0); // A = x^0 dx^1, F_01 = 1
  VectorField nb = bundle_covariant_field(alg, 0, cache, a);
  Element z0 = Element::coordinate(alg, 2, 0);
  Element two = Element::scalar(alg, Expr::integer(2));
  Element resid = two * nb.apply(nb.apply(z0));
  CHECK(!resid.structurally_zero());
  // 2 nabla^2 z_0 = 2 xi^0 xi^1 F_01 z_0 = 2 xi^0 xi^1 z_0
  Element expect = (Element::coordinate(alg, 0, 0) * Element::coordinate(alg, 0, 1) *
                    z0)
                       .scaled(Expr::integer(2));
  CHECK((resid - expect).structurally_zero());
}

TEST_CASE("rank mismatches are rejected") {
  ChartPtr c = minkowski_chart(4);
  AlgebraPtr alg = Algebra::bundle(c, 2);
  GeometryCache cache = geometry_cache(c);
  BundleConnection a1 = BundleConnection::trivial(4, 1);
  std::mt19937_64 rng(8);
  Element w = random_form(rng, alg, {1, 0, 1});
  CHECK_THROWS_AS(bundle_covariant_de_rham(0, w, cache, a1), std::invalid_argument);
}
