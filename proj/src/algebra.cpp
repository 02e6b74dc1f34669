#include "zform/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace zform {

Algebra::Algebra(ChartPtr chart, int n, std::vector<SectorSpec> sectors)
    : chart_(std::move(chart)), n_(n), sectors_(std::move(sectors)) {
  if (n_ < 1) throw std::invalid_argument("Algebra: n must be >= 1");
  for (auto &s : sectors_) {
    if (s.degree.size() != n_)
      throw degree_mismatch("sector degree length does not match algebra n");
    if (s.dim <= 0) throw std::invalid_argument("sector dimension must be positive");
    if (s.truncation < 1) throw std::invalid_argument("truncation order must be >= 1");
    if (is_nilpotent_degree(s.degree)) s.truncation = 1;
  }
  std::sort(sectors_.begin(), sectors_.end(),
            [](const SectorSpec &a, const SectorSpec &b) { return a.degree < b.degree; });
  for (size_t i = 0; i + 1 < sectors_.size(); ++i)
    if (sectors_[i].degree == sectors_[i + 1].degree)
      throw std::invalid_argument("duplicate sector degree");
  for (size_t i = 0; i < sectors_.size(); ++i) {
    if (!sectors_[i].prefix.empty()) continue;
    if (n_ == 2) {
      if (sectors_[i].degree == Degree{0, 1}) sectors_[i].prefix = "xi";
      else if (sectors_[i].degree == Degree{1, 0}) sectors_[i].prefix = "th";
      else if (sectors_[i].degree == Degree{1, 1}) sectors_[i].prefix = "z";
    }
    if (sectors_[i].prefix.empty()) sectors_[i].prefix = "s" + std::to_string(i);
  }
}

AlgebraPtr Algebra::biform(ChartPtr chart) {
  int D = chart->dim;
  return std::make_shared<Algebra>(
      std::move(chart), 2,
      std::vector<SectorSpec>{{Degree{0, 1}, D, 1, ""}, {Degree{1, 0}, D, 1, ""}});
}

AlgebraPtr Algebra::multiform(ChartPtr chart, int n) {
  int D = chart->dim;
  std::vector<SectorSpec> sectors;
  for (int i = 0; i < n; ++i) {
    std::vector<uint8_t> bits(n, 0);
    bits[n - 1 - i] = 1; // sector i carries degree (0,..,0,1,0,..): lex-ascending
    sectors.push_back({Degree(bits), D, 1, ""});
  }
  return std::make_shared<Algebra>(std::move(chart), n, std::move(sectors));
}

AlgebraPtr Algebra::bundle(ChartPtr chart, int rank, int truncation) {
  int D = chart->dim;
  return std::make_shared<Algebra>(
      std::move(chart), 2,
      std::vector<SectorSpec>{{Degree{0, 1}, D, 1, ""},
                              {Degree{1, 0}, D, 1, ""},
                              {Degree{1, 1}, rank, truncation, ""}});
}

int Algebra::sector_by_degree(const Degree &d) const {
  for (int i = 0; i < num_sectors(); ++i)
    if (sectors_[i].degree == d) return i;
  return -1;
}

// ---- Monomial ----------------------------------------------------------

Monomial::Monomial(const Algebra &alg) {
  exps.resize(alg.num_sectors());
  for (int s = 0; s < alg.num_sectors(); ++s)
    exps[s].assign(alg.sector(s).dim, 0);
}

bool Monomial::is_unit() const {
  for (const auto &sec : exps)
    for (int e : sec)
      if (e) return false;
  return true;
}

int Monomial::total_exp(int sector) const {
  int t = 0;
  for (int e : exps[sector]) t += e;
  return t;
}

Degree Monomial::degree(const Algebra &alg) const {
  Degree d = Degree::zero(alg.n());
  for (int s = 0; s < alg.num_sectors(); ++s)
    if (total_exp(s) % 2 == 1) d = d + alg.sector(s).degree;
  return d;
}

std::vector<std::pair<int, int>> Monomial::flat_factors() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < static_cast<int>(exps.size()); ++s)
    for (int i = 0; i < static_cast<int>(exps[s].size()); ++i)
      for (int k = 0; k < exps[s][i]; ++k) out.emplace_back(s, i);
  return out;
}

std::pair<int, Monomial> normalize_monomial(const Algebra &alg,
                                            std::vector<std::pair<int, int>> factors) {
  for (const auto &[s, i] : factors) {
    if (s < 0 || s >= alg.num_sectors() || i < 0 || i >= alg.sector(s).dim)
      throw std::out_of_range("normalize_monomial: invalid factor");
  }
  int sign = 1;
  // insertion sort; each adjacent swap multiplies by the Koszul sign of the
  // two factor degrees
  for (size_t i = 1; i < factors.size(); ++i) {
    for (size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
      sign *= koszul_sign(alg.sector(factors[j].first).degree,
                          alg.sector(factors[j - 1].first).degree);
      std::swap(factors[j], factors[j - 1]);
    }
  }
  Monomial m(alg);
  for (const auto &[s, i] : factors) {
    ++m.exps[s][i];
    if (is_nilpotent_degree(alg.sector(s).degree) && m.exps[s][i] > 1)
      return {0, Monomial(alg)};
  }
  return {sign, m};
}

// ---- Element -----------------------------------------------------------

Element Element::scalar(AlgebraPtr alg, Expr coeff) {
  Element e(alg);
  e.add_term(Monomial(*alg), coeff);
  return e;
}

Element Element::coordinate(AlgebraPtr alg, int sector, int index) {
  return monomial(std::move(alg), {{sector, index}}, Expr::integer(1));
}

Element Element::monomial(AlgebraPtr alg, const std::vector<std::pair<int, int>> &factors,
                          Expr coeff) {
  auto [sign, m] = normalize_monomial(*alg, factors);
  Element e(alg);
  if (sign != 0)
    e.add_term(m, sign == 1 ? coeff : -coeff);
  return e;
}

void Element::check_same(const Element &o) const {
  if (alg_ != o.alg_)
    throw algebra_mismatch("elements belong to different algebras");
}

Expr Element::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Expr::integer(0) : it->second;
}

void Element::add_term(const Monomial &m, const Expr &coeff) {
  if (coeff.is_zero()) return;
  for (int s = 0; s < alg_->num_sectors(); ++s)
    if (m.total_exp(s) > alg_->sector(s).truncation &&
        !is_nilpotent_degree(alg_->sector(s).degree))
      return; // truncated power series
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element &o) const {
  check_same(o);
  Element r = *this;
  for (const auto &[m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Element Element::operator-(const Element &o) const { return *this + (-o); }

Element Element::operator-() const {
  Element r(alg_);
  for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::operator*(const Element &o) const {
  check_same(o);
  Element r(alg_);
  for (const auto &[ma, ca] : terms_) {
    auto fa = ma.flat_factors();
    for (const auto &[mb, cb] : o.terms_) {
      auto factors = fa;
      auto fb = mb.flat_factors();
      factors.insert(factors.end(), fb.begin(), fb.end());
      auto [sign, m] = normalize_monomial(*alg_, std::move(factors));
      if (sign == 0) continue;
      Expr c = ca * cb;
      r.add_term(m, sign == 1 ? c : -c);
    }
  }
  return r;
}

Element Element::scaled(const Expr &f) const {
  Element r(alg_);
  for (const auto &[m, c] : terms_) r.add_term(m, c * f);
  return r;
}

Element Element::sector_derivative(int sector, int index) const {
  if (sector < 0 || sector >= alg_->num_sectors() || index < 0 ||
      index >= alg_->sector(sector).dim)
    throw std::out_of_range("sector_derivative: invalid sector/index");
  const Degree &dDeg = alg_->sector(sector).degree;
  Element r(alg_);
  for (const auto &[m, c] : terms_) {
    auto flat = m.flat_factors();
    for (size_t p = 0; p < flat.size(); ++p) {
      if (flat[p] != std::make_pair(sector, index)) continue;
      // move the target occurrence to the front past p factors
      int sign = 1;
      for (size_t k = 0; k < p; ++k)
        sign *= koszul_sign(dDeg, alg_->sector(flat[k].first).degree);
      auto rest = flat;
      rest.erase(rest.begin() + p);
      auto [s2, m2] = normalize_monomial(*alg_, std::move(rest));
      sign *= s2; // rest is already canonical; s2 is +1
      r.add_term(m2, sign == 1 ? c : -c);
    }
  }
  return r;
}

Element Element::coordinate_derivative(int coordIndex) const {
  if (coordIndex < 0 || coordIndex >= alg_->dim())
    throw std::out_of_range("coordinate_derivative: invalid coordinate");
  Element r(alg_);
  for (const auto &[m, c] : terms_) r.add_term(m, c.diff(coordIndex));
  return r;
}

std::optional<Degree> Element::homogeneous_degree() const {
  if (terms_.empty()) return Degree::zero(alg_ ? alg_->n() : 1);
  std::optional<Degree> d;
  for (const auto &[m, c] : terms_) {
    Degree md = m.degree(*alg_);
    if (!d) d = md;
    else if (!(*d == md)) return std::nullopt;
  }
  return d;
}

std::string monomial_str(const Algebra &alg, const Monomial &m) {
  std::string s;
  for (int sec = 0; sec < alg.num_sectors(); ++sec) {
    for (int i = 0; i < static_cast<int>(m.exps[sec].size()); ++i) {
      int e = m.exps[sec][i];
      if (!e) continue;
      if (!s.empty()) s += " ";
      s += alg.sector(sec).prefix + std::to_string(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str(alg_->chart()->coords);
    bool needParens = c.kind() == Expr::Kind::Sum && !m.is_unit();
    if (m.is_unit()) {
      os << cs;
    } else {
      if (!(c.is_number() && c.number_value() == 1)) {
        os << (needParens ? "(" + cs + ")" : cs) << "*";
      }
      os << monomial_str(*alg_, m);
    }
  }
  return os.str();
}

} // namespace zform
