#include "zform/expr.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace zform {

Rational rational_pow(const Rational &q, int e) {
  if (e == 0) return Rational(1);
  if (q == 0) {
    if (e < 0) throw eval_domain_error("division by zero constant", "0");
    return Rational(0);
  }
  Rational base = e > 0 ? q : Rational(1) / q;
  int n = e > 0 ? e : -e;
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

struct Expr::Node {
  Kind kind = Kind::Number;
  Rational num;        // Number; Sum constant
  int coord = -1;      // Coord
  std::string param;   // Param
  Fn fn = Fn::Sin;     // Func
  std::vector<Expr> args;                          // Func argument
  std::vector<std::pair<Rational, Expr>> terms;    // Sum
  std::vector<std::pair<Expr, int>> factors;       // Product
};

Expr::Expr() { *this = number(Rational(0)); }

Expr Expr::number(Rational q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->num = std::move(q);
  return Expr(std::move(n));
}

Expr Expr::coord(int index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Coord;
  n->coord = index;
  return Expr(std::move(n));
}

Expr Expr::param(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  n->param = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::func(Fn f, const Expr &arg) {
  // fold a couple of exact constants
  if (arg.is_number()) {
    const Rational &q = arg.number_value();
    if (q == 0) {
      switch (f) {
      case Fn::Sin: case Fn::Tan: case Fn::Sqrt: return number(0);
      case Fn::Cos: case Fn::Exp: return number(1);
      case Fn::Ln: break; // singular, keep symbolic; eval reports it
      }
    }
    if (q == 1 && f == Fn::Ln) return number(0);
    if (q == 1 && f == Fn::Sqrt) return number(1);
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Func;
  n->fn = f;
  n->args.push_back(arg);
  return Expr(std::move(n));
}

Expr Expr::sum(Rational constant, std::vector<std::pair<Rational, Expr>> in) {
  std::vector<std::pair<Rational, Expr>> flat;
  flat.reserve(in.size());
  for (auto &[c, t] : in) {
    if (c == 0) continue;
    switch (t.kind()) {
    case Kind::Number:
      constant += c * t.number_value();
      break;
    case Kind::Sum: {
      constant += c * t.sum_constant();
      for (const auto &[ci, ti] : t.sum_terms()) flat.emplace_back(c * ci, ti);
      break;
    }
    default:
      flat.emplace_back(std::move(c), t);
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const auto &a, const auto &b) { return expr_cmp(a.second, b.second) < 0; });
  std::vector<std::pair<Rational, Expr>> terms;
  for (auto &e : flat) {
    if (!terms.empty() && expr_cmp(terms.back().second, e.second) == 0)
      terms.back().first += e.first;
    else
      terms.push_back(std::move(e));
  }
  std::erase_if(terms, [](const auto &p) { return p.first == 0; });
  if (terms.empty()) return number(std::move(constant));
  if (constant == 0 && terms.size() == 1 && terms[0].first == 1)
    return terms[0].second;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->num = std::move(constant);
  n->terms = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::product(Rational prefactor, std::vector<std::pair<Expr, int>> in) {
  if (prefactor == 0) return number(0);
  std::vector<std::pair<Expr, int>> flat;
  // worklist so nested products / scalar-multiple bases unwrap fully
  while (!in.empty()) {
    auto [b, e] = std::move(in.back());
    in.pop_back();
    if (e == 0) continue;
    switch (b.kind()) {
    case Kind::Number:
      prefactor *= rational_pow(b.number_value(), e);
      if (prefactor == 0) return number(0);
      break;
    case Kind::Product:
      for (const auto &[bi, ei] : b.product_factors()) in.emplace_back(bi, ei * e);
      break;
    case Kind::Sum:
      // (c*t)^e with zero constant unwraps to c^e * t^e
      if (b.sum_constant() == 0 && b.sum_terms().size() == 1) {
        prefactor *= rational_pow(b.sum_terms()[0].first, e);
        in.emplace_back(b.sum_terms()[0].second, e);
      } else if (b.sum_terms().back().first < 0) {
        // canonical sign: pull -1 out of sums whose leading coefficient is
        // negative so f*(-g) and -(f*g) share one normal form
        std::vector<std::pair<Rational, Expr>> neg;
        neg.reserve(b.sum_terms().size());
        for (const auto &[c, t] : b.sum_terms()) neg.emplace_back(-c, t);
        prefactor *= rational_pow(Rational(-1), e);
        in.emplace_back(sum(-b.sum_constant(), std::move(neg)), e);
      } else {
        flat.emplace_back(std::move(b), e);
      }
      break;
    default:
      flat.emplace_back(std::move(b), e);
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const auto &a, const auto &b) { return expr_cmp(a.first, b.first) < 0; });
  std::vector<std::pair<Expr, int>> factors;
  for (auto &f : flat) {
    if (!factors.empty() && expr_cmp(factors.back().first, f.first) == 0)
      factors.back().second += f.second;
    else
      factors.push_back(std::move(f));
  }
  std::erase_if(factors, [](const auto &p) { return p.second == 0; });
  if (factors.empty()) return number(std::move(prefactor));

  // Distribute sums with positive exponents so polynomial expressions are
  // fully expanded: canonical products keep sum bases only in denominators.
  // This is what makes structural equality a decision procedure for
  // polynomial identities.
  std::vector<Expr> sums;
  std::vector<std::pair<Expr, int>> rest;
  for (auto &f : factors) {
    if (f.first.kind() == Kind::Sum && f.second > 0)
      for (int i = 0; i < f.second; ++i) sums.push_back(f.first);
    else
      rest.push_back(std::move(f));
  }
  factors = std::move(rest);
  if (!sums.empty()) {
    Expr acc = product(std::move(prefactor), std::move(factors));
    for (const Expr &s : sums) {
      // split acc into constant + coefficient-term pairs
      Rational accConst(0);
      std::vector<std::pair<Rational, Expr>> accTerms;
      if (acc.is_number()) accConst = acc.number_value();
      else if (acc.kind() == Kind::Sum) {
        accConst = acc.sum_constant();
        accTerms = acc.sum_terms();
      } else accTerms.emplace_back(1, acc);

      Rational outConst = accConst * s.sum_constant();
      std::vector<std::pair<Rational, Expr>> out;
      if (accConst != 0)
        for (const auto &[cs, ts] : s.sum_terms()) out.emplace_back(accConst * cs, ts);
      for (const auto &[ca, ta] : accTerms) {
        if (s.sum_constant() != 0) out.emplace_back(ca * s.sum_constant(), ta);
        for (const auto &[cs, ts] : s.sum_terms())
          out.emplace_back(ca * cs, product(1, {{ta, 1}, {ts, 1}}));
      }
      acc = sum(std::move(outConst), std::move(out));
    }
    return acc;
  }

  Expr core;
  if (factors.size() == 1 && factors[0].second == 1) {
    core = factors[0].first;
  } else {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->factors = std::move(factors);
    core = Expr(std::move(n));
  }
  if (prefactor == 1) return core;
  return sum(0, {{std::move(prefactor), core}});
}

Expr::Kind Expr::kind() const { return node_->kind; }
bool Expr::is_zero() const { return node_->kind == Kind::Number && node_->num == 0; }
bool Expr::is_number() const { return node_->kind == Kind::Number; }
const Rational &Expr::number_value() const { return node_->num; }
int Expr::coord_index() const { return node_->coord; }
const std::string &Expr::param_name() const { return node_->param; }
Expr::Fn Expr::fn() const { return node_->fn; }
const Expr &Expr::fn_arg() const { return node_->args[0]; }
const Rational &Expr::sum_constant() const { return node_->num; }
const std::vector<std::pair<Rational, Expr>> &Expr::sum_terms() const { return node_->terms; }
const std::vector<std::pair<Expr, int>> &Expr::product_factors() const { return node_->factors; }

Expr Expr::operator+(const Expr &o) const { return sum(0, {{1, *this}, {1, o}}); }
Expr Expr::operator-(const Expr &o) const { return sum(0, {{1, *this}, {-1, o}}); }
Expr Expr::operator-() const { return sum(0, {{-1, *this}}); }
Expr Expr::operator*(const Expr &o) const { return product(1, {{*this, 1}, {o, 1}}); }
Expr Expr::operator/(const Expr &o) const { return product(1, {{*this, 1}, {o, -1}}); }
Expr Expr::pow(int e) const { return product(1, {{*this, e}}); }

bool Expr::operator==(const Expr &o) const { return expr_cmp(*this, o) == 0; }
bool Expr::operator<(const Expr &o) const { return expr_cmp(*this, o) < 0; }

int expr_cmp(const Expr &a, const Expr &b) {
  if (a.node_ == b.node_) return 0;
  auto rank = [](Expr::Kind k) { return static_cast<int>(k); };
  if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  const auto &na = *a.node_;
  const auto &nb = *b.node_;
  auto cmp_rat = [](const Rational &x, const Rational &y) {
    return x < y ? -1 : (x == y ? 0 : 1);
  };
  switch (a.kind()) {
  case Expr::Kind::Number:
    return cmp_rat(na.num, nb.num);
  case Expr::Kind::Coord:
    return na.coord < nb.coord ? -1 : (na.coord == nb.coord ? 0 : 1);
  case Expr::Kind::Param:
    return na.param.compare(nb.param) < 0 ? -1 : (na.param == nb.param ? 0 : 1);
  case Expr::Kind::Func: {
    if (na.fn != nb.fn) return static_cast<int>(na.fn) < static_cast<int>(nb.fn) ? -1 : 1;
    return expr_cmp(na.args[0], nb.args[0]);
  }
  case Expr::Kind::Product: {
    size_t n = std::min(na.factors.size(), nb.factors.size());
    for (size_t i = 0; i < n; ++i) {
      if (int c = expr_cmp(na.factors[i].first, nb.factors[i].first)) return c;
      if (na.factors[i].second != nb.factors[i].second)
        return na.factors[i].second < nb.factors[i].second ? -1 : 1;
    }
    if (na.factors.size() != nb.factors.size())
      return na.factors.size() < nb.factors.size() ? -1 : 1;
    return 0;
  }
  case Expr::Kind::Sum: {
    size_t n = std::min(na.terms.size(), nb.terms.size());
    for (size_t i = 0; i < n; ++i) {
      if (int c = expr_cmp(na.terms[i].second, nb.terms[i].second)) return c;
      if (int c = cmp_rat(na.terms[i].first, nb.terms[i].first)) return c;
    }
    if (na.terms.size() != nb.terms.size())
      return na.terms.size() < nb.terms.size() ? -1 : 1;
    return cmp_rat(na.num, nb.num);
  }
  }
  return 0;
}

Expr Expr::diff(int i) const {
  switch (kind()) {
  case Kind::Number:
  case Kind::Param:
    return number(0);
  case Kind::Coord:
    return number(coord_index() == i ? 1 : 0);
  case Kind::Func: {
    Expr u = fn_arg();
    Expr du = u.diff(i);
    if (du.is_zero()) return du;
    Expr outer;
    switch (fn()) {
    case Fn::Sin: outer = func(Fn::Cos, u); break;
    case Fn::Cos: outer = -func(Fn::Sin, u); break;
    case Fn::Tan: outer = integer(1) + func(Fn::Tan, u).pow(2); break;
    case Fn::Exp: outer = func(Fn::Exp, u); break;
    case Fn::Ln:  outer = u.pow(-1); break;
    case Fn::Sqrt: outer = Rational(1, 2) * func(Fn::Sqrt, u).pow(-1); break;
    }
    return outer * du;
  }
  case Kind::Product: {
    const auto &fs = product_factors();
    std::vector<std::pair<Rational, Expr>> terms;
    for (size_t k = 0; k < fs.size(); ++k) {
      Expr dk = fs[k].first.diff(i);
      if (dk.is_zero()) continue;
      std::vector<std::pair<Expr, int>> rest;
      rest.reserve(fs.size() + 1);
      for (size_t j = 0; j < fs.size(); ++j)
        rest.emplace_back(fs[j].first, j == k ? fs[j].second - 1 : fs[j].second);
      rest.emplace_back(dk, 1);
      terms.emplace_back(Rational(fs[k].second), product(1, std::move(rest)));
    }
    return sum(0, std::move(terms));
  }
  case Kind::Sum: {
    std::vector<std::pair<Rational, Expr>> terms;
    for (const auto &[c, t] : sum_terms()) terms.emplace_back(c, t.diff(i));
    return sum(0, std::move(terms));
  }
  }
  return number(0);
}

double Expr::eval(std::span<const double> point,
                  const std::map<std::string, double> &params) const {
  switch (kind()) {
  case Kind::Number:
    return static_cast<double>(node_->num);
  case Kind::Coord:
    if (coord_index() < 0 || coord_index() >= static_cast<int>(point.size()))
      throw eval_domain_error("coordinate index out of range", str());
    return point[coord_index()];
  case Kind::Param: {
    auto it = params.find(param_name());
    if (it == params.end())
      throw eval_domain_error("unbound parameter", param_name());
    return it->second;
  }
  case Kind::Func: {
    double u = fn_arg().eval(point, params);
    switch (fn()) {
    case Fn::Sin: return std::sin(u);
    case Fn::Cos: return std::cos(u);
    case Fn::Tan: {
      double v = std::tan(u);
      if (!std::isfinite(v)) throw eval_domain_error("tan pole", str());
      return v;
    }
    case Fn::Exp: return std::exp(u);
    case Fn::Ln:
      if (u <= 0) throw eval_domain_error("ln of non-positive value", str());
      return std::log(u);
    case Fn::Sqrt:
      if (u < 0) throw eval_domain_error("sqrt of negative value", str());
      return std::sqrt(u);
    }
    return 0;
  }
  case Kind::Product: {
    double r = 1;
    for (const auto &[b, e] : product_factors()) {
      double v = b.eval(point, params);
      if (v == 0 && e < 0) throw eval_domain_error("division by zero", str());
      r *= std::pow(v, e);
    }
    if (!std::isfinite(r)) throw eval_domain_error("non-finite product", str());
    return r;
  }
  case Kind::Sum: {
    double r = static_cast<double>(node_->num);
    for (const auto &[c, t] : sum_terms())
      r += static_cast<double>(c) * t.eval(point, params);
    return r;
  }
  }
  return 0;
}

Expr Expr::subst_coords(const std::vector<Expr> &repl) const {
  switch (kind()) {
  case Kind::Number:
  case Kind::Param:
    return *this;
  case Kind::Coord: {
    int i = coord_index();
    if (i < 0 || i >= static_cast<int>(repl.size()))
      throw std::runtime_error("subst_coords: index out of range");
    return repl[i];
  }
  case Kind::Func:
    return func(fn(), fn_arg().subst_coords(repl));
  case Kind::Product: {
    std::vector<std::pair<Expr, int>> fs;
    for (const auto &[b, e] : product_factors()) fs.emplace_back(b.subst_coords(repl), e);
    return product(1, std::move(fs));
  }
  case Kind::Sum: {
    std::vector<std::pair<Rational, Expr>> ts;
    for (const auto &[c, t] : sum_terms()) ts.emplace_back(c, t.subst_coords(repl));
    return sum(sum_constant(), std::move(ts));
  }
  }
  return *this;
}

Expr simplify(const Expr &f) {
  switch (f.kind()) {
  case Expr::Kind::Number:
  case Expr::Kind::Coord:
  case Expr::Kind::Param:
    return f;
  case Expr::Kind::Func:
    return Expr::func(f.fn(), simplify(f.fn_arg()));
  case Expr::Kind::Product: {
    std::vector<std::pair<Expr, int>> fs;
    for (const auto &[b, e] : f.product_factors()) fs.emplace_back(simplify(b), e);
    return Expr::product(1, std::move(fs));
  }
  case Expr::Kind::Sum: {
    std::vector<std::pair<Rational, Expr>> ts;
    for (const auto &[c, t] : f.sum_terms()) ts.emplace_back(c, simplify(t));
    return Expr::sum(f.sum_constant(), std::move(ts));
  }
  }
  return f;
}

// ---- printing ----------------------------------------------------------

namespace {

std::string rat_str(const Rational &q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

const char *fn_name(Expr::Fn f) {
  switch (f) {
  case Expr::Fn::Sin: return "sin";
  case Expr::Fn::Cos: return "cos";
  case Expr::Fn::Tan: return "tan";
  case Expr::Fn::Exp: return "exp";
  case Expr::Fn::Ln: return "ln";
  case Expr::Fn::Sqrt: return "sqrt";
  }
  return "?";
}

// precedence levels: 0 sum, 1 product, 2 power-base/atom
std::string print(const Expr &e, const std::vector<std::string> &coords, int parent);

std::string print_atom(const Expr &e, const std::vector<std::string> &coords) {
  return print(e, coords, 2);
}

std::string print(const Expr &e, const std::vector<std::string> &coords, int parent) {
  switch (e.kind()) {
  case Expr::Kind::Number: {
    std::string s = rat_str(e.number_value());
    bool needs = (parent >= 1) &&
                 (e.number_value() < 0 || s.find('/') != std::string::npos);
    return needs ? "(" + s + ")" : s;
  }
  case Expr::Kind::Coord: {
    int i = e.coord_index();
    if (i >= 0 && i < static_cast<int>(coords.size())) return coords[i];
    return "x" + std::to_string(i);
  }
  case Expr::Kind::Param:
    return e.param_name();
  case Expr::Kind::Func:
    return std::string(fn_name(e.fn())) + "(" + print(e.fn_arg(), coords, 0) + ")";
  case Expr::Kind::Product: {
    std::string num, den;
    for (const auto &[b, ex] : e.product_factors()) {
      std::string bs = print_atom(b, coords);
      if (b.kind() == Expr::Kind::Sum || b.kind() == Expr::Kind::Product)
        bs = "(" + bs + ")";
      int k = ex > 0 ? ex : -ex;
      std::string piece = k == 1 ? bs : bs + "^" + std::to_string(k);
      std::string &dst = ex > 0 ? num : den;
      if (!dst.empty()) dst += "*";
      dst += piece;
    }
    std::string s = num.empty() ? "1" : num;
    if (!den.empty()) {
      bool multi = den.find('*') != std::string::npos;
      s += "/" + (multi ? "(" + den + ")" : den);
    }
    return s;
  }
  case Expr::Kind::Sum: {
    std::string s;
    auto term_str = [&](const Rational &c, const Expr &t) {
      Rational a = c < 0 ? Rational(-c) : c;
      std::string piece;
      if (a == 1) {
        piece = print(t, coords, 1);
      } else {
        std::string cs = rat_str(a);
        piece = cs + "*" + print(t, coords, 1);
      }
      return piece;
    };
    bool first = true;
    for (const auto &[c, t] : e.sum_terms()) {
      if (first) {
        s += (c < 0 ? "-" : "") + term_str(c, t);
        first = false;
      } else {
        s += (c < 0 ? " - " : " + ") + term_str(c, t);
      }
    }
    const Rational &k = e.sum_constant();
    if (k != 0) {
      if (first) {
        s = rat_str(k);
      } else {
        Rational a = k < 0 ? Rational(-k) : k;
        s += (k < 0 ? " - " : " + ") + rat_str(a);
      }
    }
    if (parent >= 1) s = "(" + s + ")";
    return s;
  }
  }
  return "?";
}

} // namespace

std::string Expr::str(const std::vector<std::string> &coords) const {
  return print(*this, coords, 0);
}

std::string Expr::str() const { return str({}); }

// ---- zero testing ------------------------------------------------------

ZeroDecision zero_test(const Expr &f, int dim,
                       const std::vector<std::string> &params, double tol,
                       int npoints, uint64_t seed) {
  if (f.is_zero()) return ZeroDecision::StructuralZero;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.3, 2.3);
  int done = 0, attempts = 0;
  while (done < npoints && attempts < npoints * 8) {
    ++attempts;
    std::vector<double> p(dim);
    for (auto &v : p) v = dist(rng);
    std::map<std::string, double> pv;
    for (const auto &name : params) pv[name] = dist(rng);
    try {
      double r = f.eval(p, pv);
      if (std::abs(r) > tol) return ZeroDecision::NonZero;
      ++done;
    } catch (const eval_domain_error &) {
      continue; // singular sample, draw another
    }
  }
  if (done == 0) return ZeroDecision::NonZero; // could not evaluate anywhere
  return ZeroDecision::SampledZero;
}

} // namespace zform
