#ifndef ZFORM_MULTIFORM_HPP
#define ZFORM_MULTIFORM_HPP

#include "zform/algebra.hpp"

#include <functional>
#include <json.hpp>

namespace zform {

/// Per-sector degrees (sector order ascending) when the element is
/// multidegree-homogeneous.
std::optional<std::vector<int>> multidegree(const Element &e);

/// Sector de Rham differential: sum_mu (sector coordinate mu) * d/dx^mu.
Element de_rham(int sector, const Element &omega);

/// Degree-moving derivation: sum_mu (source coordinate mu) * d/d(target mu).
Element delta_op(int source, int target, const Element &omega);

/// The metric (1,1)-form th^mu xi^nu g_{nu mu} built from the chart metric
/// (constant entries required for the flat eta; any chart works here).
Element metric_form(const AlgebraPtr &alg);

/// eta^{mu nu} d/dth^mu then d/dxi^nu, summed; lowers both degrees by one.
/// Requires an n=2 algebra over a constant metric chart.
Element eta_inverse_apply(const Element &omega);

Element interior_product(int sector, const std::vector<Expr> &X, const Element &omega);
/// Cartan formula in the given sector: i_X d + d i_X.
Element lie_derivative(int sector, const std::vector<Expr> &X, const Element &omega);

/// Pullback along x -> x Lambda + a (formal coordinates transform linearly
/// with the same Lambda). Throws on singular Lambda.
Element poincare_pullback(const Element &omega,
                          const std::vector<std::vector<double>> &Lambda,
                          const std::vector<double> &a);

/// Lambda^T eta Lambda == eta within tol, for the chart's constant metric.
bool is_lorentz(const std::vector<std::vector<double>> &Lambda, const Chart &chart,
                double tol = 1e-12);

struct CurtrightResult {
  Element constraintResidual; // Delta_(0,1) C
  Element F;                  // d_(0,1) C
  Element E;                  // d_(1,0) d_(0,1) C
  Element ricci;              // eta^{-1}(E)
  Element trace;              // eta^{-1}(eta^{-1}(E))
};

/// The full pipeline for a (1,2)-form on a 5-dimensional constant-metric
/// chart.
CurtrightResult curtright_pipeline(const Element &C);

// ---- component arrays --------------------------------------------------

/// Unnormalized antisymmetric component for arbitrary per-sector index
/// lists (sector order ascending): block-permutation signs applied, zero on
/// repeated indices within a nilpotent block.
Expr component(const Element &e, const std::vector<std::vector<int>> &blocks);

/// Build a multidegree-homogeneous form from its component function,
/// evaluated at strictly increasing index blocks.
Element form_from_components(
    const AlgebraPtr &alg, const std::vector<int> &multidegree,
    const std::function<Expr(const std::vector<std::vector<int>> &)> &comp);

/// JSON export for bi-forms (n=2): multidegree [p,q] = (th-degree,
/// xi-degree), component indices [[mu...],[nu...]] = (xi block, th block),
/// strictly increasing.
nlohmann::json components_json(const Element &e);
Element element_from_components_json(const AlgebraPtr &alg, const nlohmann::json &j);

} // namespace zform

#endif
