#include "zform/multiform.hpp"
#include "zform/parser.hpp"

#include <algorithm>
#include <cmath>

namespace zform {

namespace {

Element coord_elem(const AlgebraPtr &alg, int sector, int index) {
  return Element::coordinate(alg, sector, index);
}

void require_n2(const Element &e, const char *what) {
  if (e.algebra()->n() != 2)
    throw std::invalid_argument(std::string(what) + " requires an n=2 algebra");
}

/// Exact inverse of the chart's constant metric.
std::vector<std::vector<Rational>> constant_metric_inverse(const Chart &chart) {
  if (!chart.metric_is_constant())
    throw std::invalid_argument("constant metric required (flat chart)");
  int D = chart.dim;
  std::vector<std::vector<Rational>> a(D, std::vector<Rational>(D));
  std::vector<std::vector<Rational>> inv(D, std::vector<Rational>(D, 0));
  for (int i = 0; i < D; ++i) {
    for (int j = 0; j < D; ++j) a[i][j] = chart.metric[i][j].number_value();
    inv[i][i] = 1;
  }
  // Gauss-Jordan with partial pivoting over exact rationals
  for (int col = 0; col < D; ++col) {
    int piv = -1;
    for (int r = col; r < D; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::invalid_argument("metric is singular");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rational d = a[col][col];
    for (int j = 0; j < D; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (int r = 0; r < D; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < D; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int reversal_sign(int k) { return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1; }

} // namespace

std::optional<std::vector<int>> multidegree(const Element &e) {
  const auto &alg = *e.algebra();
  std::optional<std::vector<int>> md;
  for (const auto &[m, c] : e.terms()) {
    std::vector<int> d(alg.num_sectors());
    for (int s = 0; s < alg.num_sectors(); ++s) d[s] = m.total_exp(s);
    if (!md) md = d;
    else if (*md != d) return std::nullopt;
  }
  if (!md) md = std::vector<int>(alg.num_sectors(), 0);
  return md;
}

Element de_rham(int sector, const Element &omega) {
  const auto &alg = omega.algebra();
  Element r(alg);
  for (int mu = 0; mu < alg->sector(sector).dim; ++mu)
    r = r + coord_elem(alg, sector, mu) * omega.coordinate_derivative(mu);
  return r;
}

Element delta_op(int source, int target, const Element &omega) {
  const auto &alg = omega.algebra();
  if (source == target)
    throw std::invalid_argument("delta_op: source and target sectors must differ");
  if (source < 0 || source >= alg->num_sectors() || target < 0 ||
      target >= alg->num_sectors())
    throw std::out_of_range("delta_op: invalid sector");
  int d = std::min(alg->sector(source).dim, alg->sector(target).dim);
  Element r(alg);
  for (int mu = 0; mu < d; ++mu)
    r = r + coord_elem(alg, source, mu) * omega.sector_derivative(target, mu);
  return r;
}

Element metric_form(const AlgebraPtr &alg) {
  if (alg->n() != 2) throw std::invalid_argument("metric_form requires n=2");
  const Chart &chart = *alg->chart();
  Element g(alg);
  for (int mu = 0; mu < chart.dim; ++mu)
    for (int nu = 0; nu < chart.dim; ++nu) {
      const Expr &gnm = chart.metric[nu][mu];
      if (gnm.is_zero()) continue;
      // th^mu xi^nu g_{nu mu}
      g = g + (coord_elem(alg, 1, mu) * coord_elem(alg, 0, nu)).scaled(gnm);
    }
  return g;
}

Element eta_inverse_apply(const Element &omega) {
  require_n2(omega, "eta_inverse_apply");
  const auto &alg = omega.algebra();
  auto ginv = constant_metric_inverse(*alg->chart());
  int D = alg->chart()->dim;
  Element r(alg);
  for (int mu = 0; mu < D; ++mu) {
    Element dth = omega.sector_derivative(1, mu); // d/dth^mu first
    if (dth.structurally_zero()) continue;
    for (int nu = 0; nu < D; ++nu) {
      if (ginv[mu][nu] == 0) continue;
      r = r + dth.sector_derivative(0, nu).scaled(ginv[mu][nu]);
    }
  }
  return r;
}

Element interior_product(int sector, const std::vector<Expr> &X, const Element &omega) {
  const auto &alg = omega.algebra();
  if (static_cast<int>(X.size()) != alg->sector(sector).dim)
    throw std::invalid_argument("interior_product: component count mismatch");
  Element r(alg);
  for (int mu = 0; mu < alg->sector(sector).dim; ++mu)
    r = r + omega.sector_derivative(sector, mu).scaled(X[mu]);
  return r;
}

Element lie_derivative(int sector, const std::vector<Expr> &X, const Element &omega) {
  return interior_product(sector, X, de_rham(sector, omega)) +
         de_rham(sector, interior_product(sector, X, omega));
}

Element poincare_pullback(const Element &omega,
                          const std::vector<std::vector<double>> &Lambda,
                          const std::vector<double> &a) {
  const auto &alg = omega.algebra();
  int D = alg->dim();
  if (static_cast<int>(Lambda.size()) != D || static_cast<int>(a.size()) != D)
    throw std::invalid_argument("poincare_pullback: shape mismatch");
  // numeric singularity check
  {
    auto m = Lambda;
    double det = 1.0;
    for (int c = 0; c < D; ++c) {
      int piv = c;
      for (int r = c; r < D; ++r)
        if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
      if (std::abs(m[piv][c]) < 1e-12)
        throw std::invalid_argument("poincare_pullback: singular matrix");
      if (piv != c) { std::swap(m[c], m[piv]); det = -det; }
      det *= m[c][c];
      for (int r = c + 1; r < D; ++r) {
        double f = m[r][c] / m[c][c];
        for (int j = c; j < D; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if (std::abs(det) < 1e-12)
      throw std::invalid_argument("poincare_pullback: singular matrix");
  }
  auto rat = [](double v) { Rational q = v; return q; };
  // x^{mu'} substitution: x' -> x Lambda + a means the pullback of a
  // function replaces x^mu by sum_nu x^nu Lambda_nu^mu + a^mu
  std::vector<Expr> repl(D);
  for (int mu = 0; mu < D; ++mu) {
    std::vector<std::pair<Rational, Expr>> terms;
    for (int nu = 0; nu < D; ++nu)
      terms.emplace_back(rat(Lambda[nu][mu]), Expr::coord(nu));
    repl[mu] = Expr::sum(rat(a[mu]), std::move(terms));
  }
  // formal coordinate images: (s, mu) -> sum_nu Lambda_nu^mu (s, nu)
  Element r(alg);
  for (const auto &[m, c] : omega.terms()) {
    Element term = Element::scalar(alg, c.subst_coords(repl));
    for (const auto &[s, i] : m.flat_factors()) {
      Element img(alg);
      for (int nu = 0; nu < alg->sector(s).dim; ++nu) {
        Rational l = rat(Lambda[nu][i]);
        if (l == 0) continue;
        img = img + Element::monomial(alg, {{s, nu}}, Expr::number(l));
      }
      term = term * img;
    }
    r = r + term;
  }
  return r;
}

bool is_lorentz(const std::vector<std::vector<double>> &Lambda, const Chart &chart,
                double tol) {
  int D = chart.dim;
  auto params = chart.default_params();
  std::vector<double> origin(D, 0.0);
  for (int i = 0; i < D; ++i) {
    for (int j = 0; j < D; ++j) {
      double s = 0;
      for (int k = 0; k < D; ++k)
        for (int l = 0; l < D; ++l)
          s += Lambda[k][i] * chart.metric[k][l].eval(origin, params) * Lambda[l][j];
      if (std::abs(s - chart.metric[i][j].eval(origin, params)) > tol) return false;
    }
  }
  return true;
}

CurtrightResult curtright_pipeline(const Element &C) {
  require_n2(C, "curtright_pipeline");
  const auto &alg = C.algebra();
  if (alg->dim() != 5)
    throw std::invalid_argument("curtright_pipeline: chart dimension must be 5");
  auto md = multidegree(C);
  if (!md || (*md)[0] != 2 || (*md)[1] != 1)
    throw std::invalid_argument("curtright_pipeline: C must be a (1,2)-form");
  CurtrightResult r;
  r.constraintResidual = delta_op(0, 1, C);
  r.F = de_rham(0, C);
  r.E = de_rham(1, r.F);
  r.ricci = eta_inverse_apply(r.E);
  r.trace = eta_inverse_apply(r.ricci);
  return r;
}

// ---- components --------------------------------------------------------

Expr component(const Element &e, const std::vector<std::vector<int>> &blocks) {
  const auto &alg = *e.algebra();
  if (static_cast<int>(blocks.size()) != alg.num_sectors())
    throw std::invalid_argument("component: block count mismatch");
  int sign = 1;
  Monomial m(alg);
  for (int s = 0; s < alg.num_sectors(); ++s) {
    std::vector<int> idx = blocks[s];
    // bubble sort counting transpositions (blocks are antisymmetric)
    for (size_t i = 1; i < idx.size(); ++i)
      for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
        std::swap(idx[j], idx[j - 1]);
        sign = -sign;
      }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return Expr::integer(0);
    for (int i : idx) {
      if (i < 0 || i >= alg.sector(s).dim)
        throw std::out_of_range("component: index out of range");
      m.exps[s][i] = 1;
    }
    sign *= reversal_sign(static_cast<int>(idx.size()));
  }
  Expr c = e.coefficient(m);
  return sign == 1 ? c : -c;
}

Element form_from_components(
    const AlgebraPtr &alg, const std::vector<int> &md,
    const std::function<Expr(const std::vector<std::vector<int>> &)> &comp) {
  if (static_cast<int>(md.size()) != alg->num_sectors())
    throw std::invalid_argument("form_from_components: multidegree size mismatch");
  Element e(alg);
  // iterate strictly increasing tuples per sector
  std::vector<std::vector<int>> blocks(alg->num_sectors());
  std::function<void(int)> rec = [&](int s) {
    if (s == alg->num_sectors()) {
      Expr a = comp(blocks);
      if (a.is_zero()) return;
      int sign = 1;
      Monomial m(*alg);
      for (int t = 0; t < alg->num_sectors(); ++t) {
        for (int i : blocks[t]) m.exps[t][i] = 1;
        sign *= reversal_sign(static_cast<int>(blocks[t].size()));
      }
      e.add_term(m, sign == 1 ? a : -a);
      return;
    }
    int p = md[s], sdim = alg->sector(s).dim;
    std::vector<int> idx(p);
    std::function<void(int, int)> pick = [&](int k, int from) {
      if (k == p) {
        blocks[s] = idx;
        rec(s + 1);
        return;
      }
      for (int i = from; i < sdim; ++i) {
        idx[k] = i;
        pick(k + 1, i + 1);
      }
    };
    pick(0, 0);
    return;
  };
  rec(0);
  return e;
}

nlohmann::json components_json(const Element &e) {
  const auto &alg = *e.algebra();
  if (alg.n() != 2 || alg.num_sectors() != 2)
    throw std::invalid_argument("components_json: bi-form (n=2) element required");
  auto md = multidegree(e);
  if (!md) throw std::invalid_argument("components_json: element is not multidegree-homogeneous");
  nlohmann::json j;
  j["multidegree"] = {(*md)[1], (*md)[0]}; // [p,q] = (th-degree, xi-degree)
  j["dim"] = alg.dim();
  nlohmann::json comps = nlohmann::json::array();
  const auto &coords = alg.chart()->coords;
  for (const auto &[m, c] : e.terms()) {
    std::vector<std::vector<int>> blocks(2);
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < static_cast<int>(m.exps[s].size()); ++i)
        if (m.exps[s][i]) blocks[s].push_back(i);
    Expr a = component(e, blocks);
    nlohmann::json entry;
    entry["indices"] = {blocks[0], blocks[1]};
    entry["coeff"] = a.str(coords);
    comps.push_back(std::move(entry));
  }
  j["components"] = std::move(comps);
  return j;
}

Element element_from_components_json(const AlgebraPtr &alg, const nlohmann::json &j) {
  if (alg->n() != 2 || alg->num_sectors() != 2)
    throw std::invalid_argument("element_from_components_json: bi-form algebra required");
  if (j.at("dim").get<int>() != alg->dim())
    throw std::invalid_argument("element_from_components_json: dimension mismatch");
  const auto &coords = alg->chart()->coords;
  const auto &params = alg->chart()->param_names;
  std::vector<int> md = {j.at("multidegree")[1].get<int>(),
                         j.at("multidegree")[0].get<int>()};
  Element e(alg);
  for (const auto &entry : j.at("components")) {
    std::vector<std::vector<int>> blocks = {
        entry.at("indices")[0].get<std::vector<int>>(),
        entry.at("indices")[1].get<std::vector<int>>()};
    if (static_cast<int>(blocks[0].size()) != md[0] ||
        static_cast<int>(blocks[1].size()) != md[1])
      throw std::invalid_argument("element_from_components_json: block size mismatch");
    Expr a = parse_expr(entry.at("coeff").get<std::string>(), coords, params);
    int sign = 1;
    Monomial m(*alg);
    for (int s = 0; s < 2; ++s) {
      for (size_t i = 0; i + 1 < blocks[s].size(); ++i)
        if (blocks[s][i] >= blocks[s][i + 1])
          throw std::invalid_argument("element_from_components_json: indices must be strictly increasing");
      for (int i : blocks[s]) m.exps[s].at(i) = 1;
      sign *= reversal_sign(static_cast<int>(blocks[s].size()));
    }
    e.add_term(m, sign == 1 ? a : -a);
  }
  return e;
}

} // namespace zform
