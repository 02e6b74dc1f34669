#include "zform/sampling.hpp"

#include <cmath>
#include <limits>

namespace zform {

std::vector<std::vector<double>> sample_points(const Chart &chart, uint64_t seed,
                                               int count) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> pts;
  auto params = chart.default_params();
  int attempts = 0;
  while (static_cast<int>(pts.size()) < count && attempts < count * 64) {
    ++attempts;
    std::vector<double> p(chart.dim);
    for (int i = 0; i < chart.dim; ++i) {
      auto [lo, hi] = chart.box.empty() ? std::make_pair(0.5, 2.0) : chart.box[i];
      std::uniform_real_distribution<double> dist(lo, hi);
      p[i] = dist(rng);
    }
    if (chart.validity) {
      try {
        if (chart.validity->eval(p, params) <= 0) continue;
      } catch (const eval_domain_error &) {
        continue;
      }
    }
    pts.push_back(std::move(p));
  }
  if (pts.empty())
    throw std::runtime_error("sample_points: no admissible points found for chart " +
                             chart.name);
  return pts;
}

double max_abs_on_points(const Element &e,
                         const std::vector<std::vector<double>> &points) {
  const Chart &chart = *e.algebra()->chart();
  auto params = chart.default_params();
  double r = 0.0;
  for (const auto &[m, c] : e.terms()) {
    for (const auto &p : points) {
      double v = std::abs(c.eval(p, params));
      if (!std::isfinite(v))
        throw eval_domain_error("non-finite coefficient value", c.str(chart.coords));
      r = std::max(r, v);
    }
  }
  return r;
}

ElementZeroResult element_zero(const Element &e, double tol, int npoints,
                               uint64_t seed) {
  if (e.structurally_zero()) return {true, true, 0.0};
  const Chart &chart = *e.algebra()->chart();
  auto pts = sample_points(chart, seed, npoints);
  double r = 0.0;
  try {
    r = max_abs_on_points(e, pts);
  } catch (const eval_domain_error &) {
    return {false, false, std::numeric_limits<double>::infinity()};
  }
  return {r <= tol, false, r};
}

Expr random_polynomial(std::mt19937_64 &rng, int dim, int maxDeg, int terms) {
  std::uniform_int_distribution<int> coeffDist(-3, 3);
  std::uniform_int_distribution<int> degDist(0, maxDeg);
  std::uniform_int_distribution<int> coordDist(0, dim - 1);
  Expr f = Expr::integer(0);
  for (int t = 0; t < terms; ++t) {
    int c = coeffDist(rng);
    if (c == 0) c = 1;
    Expr term = Expr::integer(c);
    int deg = degDist(rng);
    for (int d = 0; d < deg; ++d) term = term * Expr::coord(coordDist(rng));
    f = f + term;
  }
  return f;
}

Element random_form(std::mt19937_64 &rng, const AlgebraPtr &alg,
                    const std::vector<int> &multidegree, int monomials, int polyDeg) {
  if (static_cast<int>(multidegree.size()) != alg->num_sectors())
    throw std::invalid_argument("random_form: multidegree size mismatch");
  Element e(alg);
  int dim = alg->dim();
  for (int k = 0; k < monomials; ++k) {
    std::vector<std::pair<int, int>> factors;
    bool ok = true;
    for (int s = 0; s < alg->num_sectors(); ++s) {
      int p = multidegree[s];
      int sdim = alg->sector(s).dim;
      if (p > sdim && is_nilpotent_degree(alg->sector(s).degree)) { ok = false; break; }
      // draw p distinct indices
      std::vector<int> pool(sdim);
      for (int i = 0; i < sdim; ++i) pool[i] = i;
      for (int i = 0; i < p; ++i) {
        std::uniform_int_distribution<int> pick(i, sdim - 1);
        std::swap(pool[i], pool[pick(rng)]);
        factors.emplace_back(s, pool[i]);
      }
    }
    if (!ok) continue;
    e = e + Element::monomial(alg, factors, random_polynomial(rng, dim, polyDeg, 2));
  }
  return e;
}

Element random_element(std::mt19937_64 &rng, const AlgebraPtr &alg, int monomials,
                       int polyDeg) {
  Element e(alg);
  int dim = alg->dim();
  for (int k = 0; k < monomials; ++k) {
    std::vector<std::pair<int, int>> factors;
    for (int s = 0; s < alg->num_sectors(); ++s) {
      int sdim = alg->sector(s).dim;
      int maxexp = is_nilpotent_degree(alg->sector(s).degree)
                       ? 1
                       : alg->sector(s).truncation;
      for (int i = 0; i < sdim; ++i) {
        std::uniform_int_distribution<int> expDist(0, maxexp);
        int ex = expDist(rng) == maxexp ? 1 : 0; // sparse occupancy
        for (int j = 0; j < ex; ++j) factors.emplace_back(s, i);
      }
    }
    e = e + Element::monomial(alg, factors, random_polynomial(rng, dim, polyDeg, 2));
  }
  return e;
}

} // namespace zform
