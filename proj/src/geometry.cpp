#include "zform/geometry.hpp"

#include <algorithm>

namespace zform {

Expr determinant(const ExprMatrix &m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Expr::integer(1);
  if (n == 1) return m[0][0];
  // cofactor expansion along the first row, skipping structural zeros
  Expr det = Expr::integer(0);
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    ExprMatrix minor(n - 1, std::vector<Expr>(n - 1));
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Expr term = m[0][j] * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

ExprMatrix symbolic_inverse(const ExprMatrix &m) {
  int n = static_cast<int>(m.size());
  Expr det = determinant(m);
  if (det.is_zero())
    throw std::invalid_argument("symbolic_inverse: determinant is identically zero");
  ExprMatrix inv(n, std::vector<Expr>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ExprMatrix minor(n - 1, std::vector<Expr>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      Expr cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof / det; // adjugate transpose / det
    }
  }
  return inv;
}

GeometryCache christoffel(const ChartPtr &chart) {
  GeometryCache cache;
  cache.chart = chart;
  int D = chart->dim;
  cache.det = determinant(chart->metric);
  cache.ginv = symbolic_inverse(chart->metric);
  // precompute metric derivatives
  std::vector<ExprMatrix> dg(D, ExprMatrix(D, std::vector<Expr>(D)));
  for (int l = 0; l < D; ++l)
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) dg[l][i][j] = chart->metric[i][j].diff(l);
  cache.christoffel.assign(D, ExprMatrix(D, std::vector<Expr>(D, Expr::integer(0))));
  Rational half(1, 2);
  for (int rho = 0; rho < D; ++rho)
    for (int nu = 0; nu < D; ++nu)
      for (int mu = 0; mu <= nu; ++mu) {
        Expr sum = Expr::integer(0);
        for (int lam = 0; lam < D; ++lam) {
          if (cache.ginv[rho][lam].is_zero()) continue;
          Expr inner = dg[nu][lam][mu] + dg[mu][lam][nu] - dg[lam][nu][mu];
          sum = sum + cache.ginv[rho][lam] * inner;
        }
        Expr g = half * sum;
        cache.christoffel[rho][nu][mu] = g;
        cache.christoffel[rho][mu][nu] = g; // torsion-free
      }
  return cache;
}

void riemann(GeometryCache &cache) {
  if (cache.curvature_ready) return;
  int D = cache.chart->dim;
  const auto &G = cache.christoffel;
  cache.riemann.assign(D, std::vector<ExprMatrix>(D, ExprMatrix(D, std::vector<Expr>(D, Expr::integer(0)))));
  for (int rho = 0; rho < D; ++rho)
    for (int sig = 0; sig < D; ++sig)
      for (int mu = 0; mu < D; ++mu)
        for (int nu = 0; nu < mu; ++nu) {
          Expr r = G[rho][nu][sig].diff(mu) - G[rho][mu][sig].diff(nu);
          for (int lam = 0; lam < D; ++lam)
            r = r + G[rho][mu][lam] * G[lam][nu][sig] - G[rho][nu][lam] * G[lam][mu][sig];
          cache.riemann[rho][sig][mu][nu] = r;
          cache.riemann[rho][sig][nu][mu] = -r;
        }
  cache.riemann_low.assign(D, std::vector<ExprMatrix>(D, ExprMatrix(D, std::vector<Expr>(D, Expr::integer(0)))));
  for (int rho = 0; rho < D; ++rho)
    for (int sig = 0; sig < D; ++sig)
      for (int mu = 0; mu < D; ++mu)
        for (int nu = 0; nu < D; ++nu) {
          Expr r = Expr::integer(0);
          for (int lam = 0; lam < D; ++lam) {
            if (cache.chart->metric[rho][lam].is_zero()) continue;
            r = r + cache.chart->metric[rho][lam] * cache.riemann[lam][sig][mu][nu];
          }
          cache.riemann_low[rho][sig][mu][nu] = r;
        }
  cache.ricci.assign(D, std::vector<Expr>(D, Expr::integer(0)));
  for (int sig = 0; sig < D; ++sig)
    for (int nu = 0; nu < D; ++nu) {
      Expr r = Expr::integer(0);
      for (int mu = 0; mu < D; ++mu) r = r + cache.riemann[mu][sig][mu][nu];
      cache.ricci[sig][nu] = r;
    }
  cache.scalar = Expr::integer(0);
  for (int mu = 0; mu < D; ++mu)
    for (int nu = 0; nu < D; ++nu) {
      if (cache.ginv[mu][nu].is_zero()) continue;
      cache.scalar = cache.scalar + cache.ginv[mu][nu] * cache.ricci[nu][mu];
    }
  cache.curvature_ready = true;
}

GeometryCache geometry_cache(const ChartPtr &chart) {
  GeometryCache cache = christoffel(chart);
  riemann(cache);
  return cache;
}

// ---- bundle connections ------------------------------------------------

BundleConnection BundleConnection::trivial(int D, int rank) {
  BundleConnection c;
  c.rank = rank;
  c.components.assign(D, ExprMatrix(rank, std::vector<Expr>(rank, Expr::integer(0))));
  return c;
}

BundleConnection BundleConnection::pure_gauge(const ChartPtr &chart, const Expr &phi) {
  BundleConnection c;
  c.rank = 1;
  for (int mu = 0; mu < chart->dim; ++mu)
    c.components.push_back({{phi.diff(mu)}});
  return c;
}

// ---- vector fields -----------------------------------------------------

Element VectorField::apply(const Element &omega) const {
  Element r(alg);
  for (int mu = 0; mu < static_cast<int>(coord_coeffs.size()); ++mu) {
    if (coord_coeffs[mu].structurally_zero()) continue;
    r = r + coord_coeffs[mu] * omega.coordinate_derivative(mu);
  }
  for (const auto &[key, coeff] : formal_coeffs) {
    if (coeff.structurally_zero()) continue;
    r = r + coeff * omega.sector_derivative(key.first, key.second);
  }
  return r;
}

Element graded_commutator_apply(const VectorField &X, const VectorField &Y,
                                const Element &omega) {
  int s = koszul_sign(X.degree, Y.degree);
  Element a = X.apply(Y.apply(omega));
  Element b = Y.apply(X.apply(omega));
  return s == 1 ? a - b : a + b;
}

VectorField de_rham_field(const AlgebraPtr &alg, int sector) {
  VectorField f;
  f.alg = alg;
  f.degree = alg->sector(sector).degree;
  for (int mu = 0; mu < alg->dim(); ++mu)
    f.coord_coeffs.push_back(Element::coordinate(alg, sector, mu));
  return f;
}

VectorField delta_field(const AlgebraPtr &alg, int source, int target) {
  VectorField f;
  f.alg = alg;
  f.degree = alg->sector(source).degree + alg->sector(target).degree;
  f.coord_coeffs.assign(alg->dim(), Element(alg));
  int d = std::min(alg->sector(source).dim, alg->sector(target).dim);
  for (int mu = 0; mu < d; ++mu)
    f.formal_coeffs[{target, mu}] = Element::coordinate(alg, source, mu);
  return f;
}

namespace {

void require_biform_sectors(const AlgebraPtr &alg) {
  if (alg->n() != 2 || alg->sector_by_degree(Degree{0, 1}) != 0 ||
      alg->sector_by_degree(Degree{1, 0}) != 1)
    throw std::invalid_argument("operation requires an n=2 bi-form algebra");
}

/// - sum_{mu nu} Gamma^rho_{nu mu} xi^mu th^nu, the shared correction
/// coefficient of both covariant de Rham derivatives.
Element gamma_correction(const AlgebraPtr &alg, const GeometryCache &cache, int rho) {
  Element c(alg);
  for (int mu = 0; mu < alg->dim(); ++mu)
    for (int nu = 0; nu < alg->dim(); ++nu) {
      const Expr &g = cache.christoffel[rho][nu][mu];
      if (g.is_zero()) continue;
      c = c - (Element::coordinate(alg, 0, mu) * Element::coordinate(alg, 1, nu)).scaled(g);
    }
  return c;
}

} // namespace

VectorField covariant_de_rham_field(const AlgebraPtr &alg, int sector,
                                    const GeometryCache &cache) {
  require_biform_sectors(alg);
  if (alg->chart() != cache.chart)
    throw std::invalid_argument("covariant_de_rham: chart/cache mismatch");
  VectorField f = de_rham_field(alg, sector);
  int other = 1 - sector;
  for (int rho = 0; rho < alg->dim(); ++rho)
    f.formal_coeffs[{other, rho}] = gamma_correction(alg, cache, rho);
  return f;
}

VectorField curvature_field(const AlgebraPtr &alg, CurvTag tag,
                            const GeometryCache &cache) {
  require_biform_sectors(alg);
  if (!cache.curvature_ready)
    throw std::invalid_argument("curvature_field: riemann() not computed");
  VectorField f;
  f.alg = alg;
  f.coord_coeffs.assign(alg->dim(), Element(alg));
  int D = alg->dim();
  // th^mu xi^lam xi^nu R^rho_{mu nu lam} acting on th^rho (and the three
  // companion displays)
  auto build = [&](int coordSector1, int coordSector2, int rho) {
    // coordSector1 carries index mu, coordSector2 carries lam and nu
    Element c(alg);
    for (int mu = 0; mu < D; ++mu)
      for (int lam = 0; lam < D; ++lam)
        for (int nu = 0; nu < D; ++nu) {
          const Expr &r = cache.riemann[rho][mu][nu][lam];
          if (r.is_zero()) continue;
          c = c + (Element::coordinate(alg, coordSector1, mu) *
                   Element::coordinate(alg, coordSector2, lam) *
                   Element::coordinate(alg, coordSector2, nu))
                      .scaled(r);
        }
    return c;
  };
  switch (tag) {
  case CurvTag::R01:
    f.degree = Degree{0, 0};
    for (int rho = 0; rho < D; ++rho) f.formal_coeffs[{1, rho}] = build(1, 0, rho);
    break;
  case CurvTag::R10:
    f.degree = Degree{0, 0};
    for (int rho = 0; rho < D; ++rho) f.formal_coeffs[{0, rho}] = build(0, 1, rho);
    break;
  case CurvTag::R11:
    // Half the naive sum: the mixed commutator [nabla_(1,0), nabla_(0,1)]
    // produces each derivative/GammaGamma structure once, whereas the
    // squared operators produce them twice.
    f.degree = Degree{0, 0};
    for (int rho = 0; rho < D; ++rho) {
      f.formal_coeffs[{1, rho}] = build(0, 1, rho).scaled(Rational(1, 2));
      f.formal_coeffs[{0, rho}] = (-build(1, 0, rho)).scaled(Rational(1, 2));
    }
    break;
  }
  return f;
}

VectorField bundle_covariant_field(const AlgebraPtr &alg, int sector,
                                   const GeometryCache &cache,
                                   const BundleConnection &conn) {
  require_biform_sectors(alg);
  int zs = alg->sector_by_degree(Degree{1, 1});
  if (zs < 0)
    throw std::invalid_argument("bundle_covariant_field: algebra has no z sector");
  if (alg->sector(zs).dim != conn.rank)
    throw std::invalid_argument("bundle_covariant_field: connection rank mismatch");
  VectorField f = covariant_de_rham_field(alg, sector, cache);
  // + (sector coordinate)^mu (A_mu)_a^b z_b d/dz_a
  for (int a = 0; a < conn.rank; ++a) {
    Element c(alg);
    for (int mu = 0; mu < alg->dim(); ++mu)
      for (int b = 0; b < conn.rank; ++b) {
        const Expr &A = conn.components[mu][a][b];
        if (A.is_zero()) continue;
        c = c + (Element::coordinate(alg, sector, mu) *
                 Element::coordinate(alg, zs, b))
                    .scaled(A);
      }
    if (!c.structurally_zero()) f.formal_coeffs[{zs, a}] = f.formal_coeffs.count({zs, a})
        ? f.formal_coeffs[{zs, a}] + c : c;
  }
  return f;
}

Element covariant_de_rham(int sector, const Element &omega, const GeometryCache &cache) {
  return covariant_de_rham_field(omega.algebra(), sector, cache).apply(omega);
}

Element curvature_operator(CurvTag tag, const Element &omega, const GeometryCache &cache) {
  return curvature_field(omega.algebra(), tag, cache).apply(omega);
}

Element susy_variation(int sector, const Element &omega, const GeometryCache &cache) {
  return covariant_de_rham(sector, omega, cache);
}

Element bundle_covariant_de_rham(int sector, const Element &omega,
                                 const GeometryCache &cache,
                                 const BundleConnection &conn) {
  return bundle_covariant_field(omega.algebra(), sector, cache, conn).apply(omega);
}

Element covariant_riemann_form(const AlgebraPtr &alg, const GeometryCache &cache) {
  require_biform_sectors(alg);
  if (!cache.curvature_ready)
    throw std::invalid_argument("covariant_riemann_form: riemann() not computed");
  int D = alg->dim();
  Element R(alg);
  // (1/4) th^nu th^mu xi^sig xi^rho R_{rho sig | mu nu}
  for (int rho = 0; rho < D; ++rho)
    for (int sig = 0; sig < D; ++sig)
      for (int mu = 0; mu < D; ++mu)
        for (int nu = 0; nu < D; ++nu) {
          const Expr &r = cache.riemann_low[rho][sig][mu][nu];
          if (r.is_zero()) continue;
          R = R + (Element::coordinate(alg, 1, nu) * Element::coordinate(alg, 1, mu) *
                   Element::coordinate(alg, 0, sig) * Element::coordinate(alg, 0, rho))
                      .scaled(r);
        }
  return R.scaled(Rational(1, 4));
}

Element ricci_form(const AlgebraPtr &alg, const GeometryCache &cache) {
  require_biform_sectors(alg);
  int D = alg->dim();
  Element r(alg);
  for (int mu = 0; mu < D; ++mu)
    for (int nu = 0; nu < D; ++nu) {
      const Expr &ric = cache.ricci[nu][mu];
      if (ric.is_zero()) continue;
      r = r + (Element::coordinate(alg, 1, mu) * Element::coordinate(alg, 0, nu)).scaled(ric);
    }
  return r;
}

BianchiResult bianchi_checks(const AlgebraPtr &alg, const GeometryCache &cache) {
  Element R = covariant_riemann_form(alg, cache);
  BianchiResult out;
  out.first = delta_op(0, 1, R);
  out.second = covariant_de_rham(0, R, cache);
  out.second10 = covariant_de_rham(1, R, cache);
  return out;
}

} // namespace zform
