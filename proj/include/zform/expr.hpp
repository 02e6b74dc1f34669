#ifndef ZFORM_EXPR_HPP
#define ZFORM_EXPR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zform {

using Rational = boost::multiprecision::cpp_rational;

/// q^e for integer e; throws on 0^negative.
Rational rational_pow(const Rational &q, int e);

struct eval_domain_error : std::runtime_error {
  eval_domain_error(const std::string &what, std::string subtree_)
      : std::runtime_error(what + " in subtree: " + subtree_),
        subtree(std::move(subtree_)) {}
  std::string subtree;
};

/// Immutable scalar expression over chart coordinates and named parameters.
///
/// Expressions are kept in an arithmetic normal form at construction:
///  - sums are flat, terms carry exact rational coefficients and are sorted,
///    identical terms are collected, the constant part is folded;
///  - products are flat with integer exponents per base, bases sorted and
///    merged (quotients are negative exponents);
///  - rational constants fold eagerly.
/// Structural equality of normal forms is therefore a sound (incomplete)
/// zero/equality test; see zero_test() for the sampling fallback.
class Expr {
public:
  enum class Kind { Number, Coord, Param, Func, Product, Sum };
  enum class Fn { Sin, Cos, Tan, Exp, Ln, Sqrt };

  Expr(); // zero

  static Expr number(Rational q);
  static Expr integer(long long v) { return number(Rational(v)); }
  static Expr coord(int index);
  static Expr param(std::string name);
  static Expr func(Fn f, const Expr &arg);
  /// constant + sum of coeff*term; normalizes.
  static Expr sum(Rational constant, std::vector<std::pair<Rational, Expr>> terms);
  /// prefactor * product of base^exp; normalizes.
  static Expr product(Rational prefactor, std::vector<std::pair<Expr, int>> factors);

  Kind kind() const;
  bool is_zero() const;   // structural: the literal 0
  bool is_number() const;
  const Rational &number_value() const; // requires Number
  int coord_index() const;              // requires Coord
  const std::string &param_name() const;
  Fn fn() const;
  const Expr &fn_arg() const;
  const Rational &sum_constant() const;
  const std::vector<std::pair<Rational, Expr>> &sum_terms() const;
  const std::vector<std::pair<Expr, int>> &product_factors() const;

  Expr operator+(const Expr &o) const;
  Expr operator-(const Expr &o) const;
  Expr operator-() const;
  Expr operator*(const Expr &o) const;
  Expr operator/(const Expr &o) const;
  Expr pow(int e) const;

  /// Exact partial derivative with respect to coordinate index.
  Expr diff(int coordIndex) const;

  /// IEEE double evaluation; throws eval_domain_error on ln/sqrt/division
  /// violations, naming the offending subtree.
  double eval(std::span<const double> point,
              const std::map<std::string, double> &params) const;

  /// Replace coordinate i by repl[i] everywhere (parameters untouched).
  Expr subst_coords(const std::vector<Expr> &repl) const;

  /// Text in the expression grammar; coordinates printed by name.
  std::string str(const std::vector<std::string> &coords) const;
  /// Fallback rendering with coordinates as x0, x1, ...
  std::string str() const;

  bool operator==(const Expr &o) const;
  bool operator<(const Expr &o) const;

  struct Node;

private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend int expr_cmp(const Expr &a, const Expr &b);
};

/// Deterministic total order used for canonical sorting.
int expr_cmp(const Expr &a, const Expr &b);

inline Expr operator*(const Rational &q, const Expr &e) {
  return Expr::sum(0, {{q, e}});
}

/// Renormalize bottom-up. Construction already normalizes, so this is a
/// fixpoint; exposed for expressions deserialized or built elsewhere.
Expr simplify(const Expr &f);

enum class ZeroDecision { StructuralZero, SampledZero, NonZero };

/// Structural test first; if inconclusive, evaluate at deterministic
/// pseudo-random points (coords in a generic positive box) and declare zero
/// iff all residuals stay below tol. Sound for zero, incomplete.
ZeroDecision zero_test(const Expr &f, int dim,
                       const std::vector<std::string> &params,
                       double tol = 1e-10, int npoints = 16,
                       uint64_t seed = 0x5eedf00d);

inline bool is_zero(const Expr &f, int dim, const std::vector<std::string> &params) {
  return zero_test(f, dim, params) != ZeroDecision::NonZero;
}

} // namespace zform

#endif
