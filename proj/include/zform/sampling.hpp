#ifndef ZFORM_SAMPLING_HPP
#define ZFORM_SAMPLING_HPP

#include "zform/algebra.hpp"

#include <random>

namespace zform {

/// Deterministic seeded draws inside the chart's admissible box, rejecting
/// points where the validity predicate is non-positive.
std::vector<std::vector<double>> sample_points(const Chart &chart, uint64_t seed,
                                               int count);

/// Max |coefficient| of an element over the given points (chart default
/// parameter values). Throws eval_domain_error if a coefficient cannot be
/// evaluated at some point.
double max_abs_on_points(const Element &e,
                         const std::vector<std::vector<double>> &points);

struct ElementZeroResult {
  bool zero = false;
  bool structural = false; // decided without sampling
  double residual = 0.0;
};

/// Structural zero first (empty canonical form); otherwise pointwise sampling
/// on the chart box.
ElementZeroResult element_zero(const Element &e, double tol = 1e-10,
                               int npoints = 16, uint64_t seed = 0x5eedf00d);

inline ElementZeroResult element_equal(const Element &a, const Element &b,
                                       double tol = 1e-10, int npoints = 16,
                                       uint64_t seed = 0x5eedf00d) {
  return element_zero(a - b, tol, npoints, seed);
}

/// Random polynomial in the chart coordinates with small exact-rational
/// coefficients; total degree <= maxDeg.
Expr random_polynomial(std::mt19937_64 &rng, int dim, int maxDeg = 2, int terms = 3);

/// Random homogeneous form of the given per-sector multidegree (sector
/// order ascending) with random polynomial coefficients.
Element random_form(std::mt19937_64 &rng, const AlgebraPtr &alg,
                    const std::vector<int> &multidegree, int monomials = 3,
                    int polyDeg = 2);

/// Random inhomogeneous element: a few monomials of arbitrary multidegree.
Element random_element(std::mt19937_64 &rng, const AlgebraPtr &alg, int monomials = 4,
                       int polyDeg = 2);

} // namespace zform

#endif
