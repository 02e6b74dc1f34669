#ifndef ZFORM_GEOMETRY_HPP
#define ZFORM_GEOMETRY_HPP

#include "zform/algebra.hpp"
#include "zform/multiform.hpp"

namespace zform {

using ExprMatrix = std::vector<std::vector<Expr>>;

Expr determinant(const ExprMatrix &m);
/// Adjugate/determinant inverse; throws if det simplifies to literal zero.
ExprMatrix symbolic_inverse(const ExprMatrix &m);

/// Levi-Civita data derived symbolically from a chart.
/// Sign convention: R^rho_{sigma mu nu} = d_mu Gamma^rho_{nu sigma}
///   - d_nu Gamma^rho_{mu sigma} + Gamma^rho_{mu lam} Gamma^lam_{nu sigma}
///   - Gamma^rho_{nu lam} Gamma^lam_{mu sigma};
/// Ricci_{sigma nu} = R^mu_{sigma mu nu}. With this convention the operator
/// identity 2 nabla_(0,1)^2 = R_(0,1) holds with coefficient +1.
struct GeometryCache {
  ChartPtr chart;
  ExprMatrix ginv;
  Expr det;
  // christoffel[rho][nu][mu] = Gamma^rho_{nu mu}
  std::vector<ExprMatrix> christoffel;
  bool curvature_ready = false;
  // riemann[rho][sigma][mu][nu] = R^rho_{sigma mu nu}
  std::vector<std::vector<ExprMatrix>> riemann;
  // riemann_low[rho][sigma][mu][nu] = R_{rho sigma | mu nu} = g_{rho lam} R^lam_{sigma mu nu}
  std::vector<std::vector<ExprMatrix>> riemann_low;
  ExprMatrix ricci; // R_{nu mu}
  Expr scalar;
};

/// First stage: inverse metric + Christoffel symbols.
GeometryCache christoffel(const ChartPtr &chart);
/// Second stage: fills Riemann, covariant Riemann, Ricci, scalar.
void riemann(GeometryCache &cache);
/// Both stages.
GeometryCache geometry_cache(const ChartPtr &chart);

/// Fiber-rank r connection one-form: components[mu](a,b) = (A_mu)_a^b.
struct BundleConnection {
  int rank = 0;
  std::vector<ExprMatrix> components; // indexed by coordinate mu
  static BundleConnection trivial(int D, int rank);
  /// Rank-1 pure gauge A_mu = d_mu phi.
  static BundleConnection pure_gauge(const ChartPtr &chart, const Expr &phi);
};

/// First-order graded differential operator: coordinate part + formal part,
/// applied as sum coeff * derivative (coefficients multiply on the left).
struct VectorField {
  AlgebraPtr alg;
  Degree degree;
  std::vector<Element> coord_coeffs;               // size chart dim
  std::map<std::pair<int, int>, Element> formal_coeffs;

  Element apply(const Element &omega) const;
};

/// Graded commutator applied to a form:
/// [X,Y] w = X(Y w) - (-1)^{<deg X, deg Y>} Y(X w).
Element graded_commutator_apply(const VectorField &X, const VectorField &Y,
                                const Element &omega);

VectorField de_rham_field(const AlgebraPtr &alg, int sector);
VectorField delta_field(const AlgebraPtr &alg, int source, int target);
/// nabla_(0,1) for sector 0 (xi), nabla_(1,0) for sector 1 (th); each
/// sector's Christoffel term corrects the other sector's coordinates.
VectorField covariant_de_rham_field(const AlgebraPtr &alg, int sector,
                                    const GeometryCache &cache);

enum class CurvTag { R01, R10, R11 };
VectorField curvature_field(const AlgebraPtr &alg, CurvTag tag,
                            const GeometryCache &cache);

VectorField bundle_covariant_field(const AlgebraPtr &alg, int sector,
                                   const GeometryCache &cache,
                                   const BundleConnection &conn);

Element covariant_de_rham(int sector, const Element &omega, const GeometryCache &cache);
Element curvature_operator(CurvTag tag, const Element &omega, const GeometryCache &cache);
/// First-order supersymmetry variation: delta omega = nabla_(s) omega.
/// Invariance (covariant constancy) = the variation vanishes.
Element susy_variation(int sector, const Element &omega, const GeometryCache &cache);
Element bundle_covariant_de_rham(int sector, const Element &omega,
                                 const GeometryCache &cache,
                                 const BundleConnection &conn);

/// Covariant Riemann (2,2)-form (1/4) th th xi xi R_{rho sigma|mu nu}.
Element covariant_riemann_form(const AlgebraPtr &alg, const GeometryCache &cache);
/// Ricci (1,1)-form th^mu xi^nu R_{nu mu}.
Element ricci_form(const AlgebraPtr &alg, const GeometryCache &cache);

struct BianchiResult {
  Element first;    // Delta_(0,1) R
  Element second;   // nabla_(0,1) R
  Element second10; // nabla_(1,0) R
};
BianchiResult bianchi_checks(const AlgebraPtr &alg, const GeometryCache &cache);

} // namespace zform

#endif
