#ifndef ZFORM_ALGEBRA_HPP
#define ZFORM_ALGEBRA_HPP

#include "zform/chart.hpp"
#include "zform/degree.hpp"
#include "zform/expr.hpp"

#include <map>
#include <optional>

namespace zform {

struct algebra_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One species of formal coordinates: its Z_2^n degree, how many there are,
/// and (for non-nilpotent degrees) the power-series truncation order.
struct SectorSpec {
  Degree degree;
  int dim = 0;
  int truncation = 1;
  std::string prefix; // display prefix; assigned by the Algebra if empty
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// The free Z_2^n-commutative algebra over a chart: base coordinates x^mu
/// plus the formal sectors. Sectors are kept sorted by lexicographic degree;
/// this fixes the canonical monomial order everywhere downstream.
class Algebra {
public:
  Algebra(ChartPtr chart, int n, std::vector<SectorSpec> sectors);

  /// n=2 bi-form algebra: xi (0,1) and th (1,0), each of chart dimension.
  static AlgebraPtr biform(ChartPtr chart);
  /// n-sector multi-form algebra: one nilpotent sector per unit degree.
  static AlgebraPtr multiform(ChartPtr chart, int n);
  /// bi-form algebra extended by a z sector of degree (1,1) and given rank.
  static AlgebraPtr bundle(ChartPtr chart, int rank, int truncation = 1);

  int n() const { return n_; }
  const ChartPtr &chart() const { return chart_; }
  int dim() const { return chart_->dim; }
  int num_sectors() const { return static_cast<int>(sectors_.size()); }
  const SectorSpec &sector(int s) const { return sectors_.at(s); }
  const std::vector<SectorSpec> &sectors() const { return sectors_; }
  /// Index of the sector with the given degree, or -1.
  int sector_by_degree(const Degree &d) const;

private:
  ChartPtr chart_;
  int n_;
  std::vector<SectorSpec> sectors_;
};

/// Canonically ordered monomial in the formal coordinates: per-sector
/// exponent vectors; nilpotent sectors only ever hold exponents 0/1.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(const Algebra &alg);

  std::vector<std::vector<int>> exps;

  bool operator==(const Monomial &) const = default;
  auto operator<=>(const Monomial &) const = default;

  bool is_unit() const;
  int total_exp(int sector) const;
  Degree degree(const Algebra &alg) const;
  /// Canonical flat factor list [(sector,index)...], sectors ascending,
  /// indices ascending, repeated per exponent.
  std::vector<std::pair<int, int>> flat_factors() const;
};

/// Sorts raw factors into canonical order accumulating the Koszul sign per
/// adjacent transposition; sign 0 iff a nilpotent coordinate repeats.
std::pair<int, Monomial> normalize_monomial(const Algebra &alg,
                                            std::vector<std::pair<int, int>> factors);

/// Sparse element of the algebra: canonical monomial -> scalar coefficient.
/// Structurally-zero coefficients are pruned; monomials that exceed a
/// non-nilpotent sector's truncation order are dropped on insertion.
class Element {
public:
  Element() = default;
  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static Element scalar(AlgebraPtr alg, Expr coeff);
  static Element coordinate(AlgebraPtr alg, int sector, int index);
  static Element monomial(AlgebraPtr alg, const std::vector<std::pair<int, int>> &factors,
                          Expr coeff);

  const AlgebraPtr &algebra() const { return alg_; }
  const std::map<Monomial, Expr> &terms() const { return terms_; }
  bool structurally_zero() const { return terms_.empty(); }

  Element operator+(const Element &o) const;
  Element operator-(const Element &o) const;
  Element operator-() const;
  /// Graded product: bilinear extension of monomial concatenation with
  /// Koszul-sign normalization; truncated in non-nilpotent sectors.
  Element operator*(const Element &o) const;
  /// Multiply every coefficient by a degree-zero scalar.
  Element scaled(const Expr &f) const;
  Element scaled(const Rational &q) const { return scaled(Expr::number(q)); }

  /// Left graded derivative with respect to formal coordinate (sector,index).
  Element sector_derivative(int sector, int index) const;
  /// d/dx^mu applied to every coefficient; monomials unchanged.
  Element coordinate_derivative(int coordIndex) const;

  /// Degree if every monomial has the same one; zero degree when empty.
  std::optional<Degree> homogeneous_degree() const;

  Expr coefficient(const Monomial &m) const;
  void add_term(const Monomial &m, const Expr &coeff);

  std::string str() const;

private:
  void check_same(const Element &o) const;
  AlgebraPtr alg_;
  std::map<Monomial, Expr> terms_;
};

std::string monomial_str(const Algebra &alg, const Monomial &m);

} // namespace zform

#endif
