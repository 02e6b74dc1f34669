#include "zform/parser.hpp"

#include <doctest.h>

using namespace zform;

namespace {
const std::vector<std::string> xy = {"x", "y"};
Expr P(const std::string &s) { return parse_expr(s, xy, {"a"}); }
} // namespace

TEST_CASE("normal form collects terms and folds constants") {
  Expr x = Expr::coord(0);
  CHECK(x + x == Expr::integer(2) * x);
  CHECK(x - x == Expr::integer(0));
  CHECK((x - x).is_zero());
  CHECK(Expr::integer(2) * Expr::integer(3) == Expr::integer(6));
  CHECK(x * x == x.pow(2));
  CHECK(x / x == Expr::integer(1));
  CHECK(x.pow(3) / x == x.pow(2));
}

TEST_CASE("rational arithmetic is exact") {
  Expr third = Expr::number(Rational(1, 3));
  Expr sum = third + third + third;
  CHECK(sum == Expr::integer(1));
  // 0.1 parses as the exact rational 1/10, not the nearest double
  Expr tenth = P("0.1");
  REQUIRE(tenth.is_number());
  CHECK(tenth.number_value() == Rational(1, 10));
  Expr acc = Expr::integer(0);
  for (int i = 0; i < 10; ++i) acc = acc + tenth;
  CHECK(acc == Expr::integer(1));
}

TEST_CASE("differentiation") {
  Expr x = Expr::coord(0), y = Expr::coord(1);
  CHECK((x * x * y).diff(0) == Expr::integer(2) * x * y);
  CHECK((x * x * y).diff(1) == x * x);
  CHECK(Expr::func(Expr::Fn::Sin, x).diff(0) == Expr::func(Expr::Fn::Cos, x));
  // chain rule through a composite argument
  Expr f = Expr::func(Expr::Fn::Exp, x * y);
  CHECK(f.diff(0) == y * f);
  CHECK((Expr::integer(1) / x).diff(0) == -(x.pow(-2)));
  CHECK(Expr::func(Expr::Fn::Ln, x).diff(0) == x.pow(-1));
}

TEST_CASE("evaluation and domain errors") {
  Expr e = P("x^2 + 2*y - a");
  double v = e.eval(std::vector<double>{3.0, 1.5}, {{"a", 1.0}});
  CHECK(v == doctest::Approx(9 + 3 - 1));
  CHECK_THROWS_AS(P("ln(x)").eval(std::vector<double>{-1.0, 0.0}, {{"a", 0.0}}),
                  eval_domain_error);
  CHECK_THROWS_AS(P("1/(x - x)").eval(std::vector<double>{1.0, 0.0}, {{"a", 0.0}}),
                  eval_domain_error);
}

TEST_CASE("parser grammar") {
  CHECK(P("x + x") == Expr::integer(2) * Expr::coord(0));
  CHECK(P("-x^2") == -(Expr::coord(0).pow(2)));
  CHECK(P("2*(x + y)") == Expr::integer(2) * Expr::coord(0) + Expr::integer(2) * Expr::coord(1));
  CHECK(P("sin(x)*cos(x)") ==
        Expr::func(Expr::Fn::Sin, Expr::coord(0)) *
            Expr::func(Expr::Fn::Cos, Expr::coord(0)));
  CHECK(P("x/y^2") == Expr::coord(0) * Expr::coord(1).pow(-2));
  CHECK_THROWS_AS(P("x +"), parse_error);
  CHECK_THROWS_AS(P("z"), parse_error); // unknown identifier
  CHECK_THROWS_AS(P("(x"), parse_error);
}

TEST_CASE("printer round-trips through the parser") {
  for (const char *src : {"x^2 + 2*y - a", "sin(x*y)/x", "1/3 * x", "-x + y^3",
                          "exp(x) * ln(y) - sqrt(x + 2)"}) {
    Expr e = P(src);
    CHECK(P(e.str(xy)) == e);
  }
}

TEST_CASE("substitution of coordinates") {
  Expr e = P("x^2 + y");
  Expr s = e.subst_coords({Expr::coord(1), Expr::coord(0)});
  CHECK(s == P("y^2 + x"));
}

TEST_CASE("zero test: structural and sampled") {
  CHECK(zero_test(P("x + y - y - x"), 2, {"a"}) == ZeroDecision::StructuralZero);
  // sin^2 + cos^2 - 1 is zero but not structurally so
  Expr t = P("sin(x)^2 + cos(x)^2 - 1");
  CHECK(zero_test(t, 2, {"a"}) == ZeroDecision::SampledZero);
  CHECK(zero_test(P("x*y - 1"), 2, {"a"}) == ZeroDecision::NonZero);
}
