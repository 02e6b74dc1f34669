#ifndef ZFORM_ORACLES_HPP
#define ZFORM_ORACLES_HPP

#include "zform/geometry.hpp"

namespace zform {

// Independent numeric/index-loop reference implementations used to validate
// the symbolic machinery. Deliberately written with plain loops over plain
// arrays so they share no code path with the graded-algebra engine.

using Mat = std::vector<std::vector<double>>;

Mat eval_metric(const Chart &chart, const std::vector<double> &x);
double numeric_det(Mat m);
Mat numeric_inverse(Mat m);

/// Central-difference Christoffels, christoffel[rho][nu][mu], from numeric
/// metric evaluations only.
std::vector<Mat> fd_christoffel(const Chart &chart, const std::vector<double> &x,
                                double h = 1e-5);

/// riemann[rho][sigma][mu][nu] = d_mu Gamma^rho_{nu sigma} - d_nu
/// Gamma^rho_{mu sigma} + Gamma Gamma - Gamma Gamma, with the Gamma-derivatives
/// taken by an outer central difference of fd_christoffel.
std::vector<std::vector<Mat>> fd_riemann(const Chart &chart,
                                         const std::vector<double> &x,
                                         double hInner = 1e-5,
                                         double hOuter = 1e-3);

/// Brute-force index-loop Curtright pipeline over full component arrays.
/// C[a][b][c] is the antisymmetric component (xi-block ab, theta-index c);
///   F[l][m][n][r]    = d_l C[m][n][r] + d_m C[n][l][r] + d_n C[l][m][r]
///   E[l][m][n][r][w] = d_w F[l][m][n][r] - d_r F[l][m][n][w]
///   ricci[m][n][r]   = - eta^{ab} E[a][m][n][b][r]
///   trace[n]         = - eta^{ab} ricci[a][n][b]
/// The eta-contraction of a (q,p) block pair carries the left-derivative
/// bookkeeping sign (-1)^{(q-1)+(p-1)}: -1 for E (q=3, p=2) and for ricci
/// (q=2, p=1).
struct CurtrightOracle {
  int D = 0;
  std::vector<std::vector<std::vector<Expr>>> C;
  std::vector<std::vector<std::vector<std::vector<Expr>>>> F;
  std::vector<std::vector<std::vector<std::vector<std::vector<Expr>>>>> E;
  std::vector<std::vector<std::vector<Expr>>> ricci;
  std::vector<Expr> trace;
};

CurtrightOracle curtright_oracle(const Element &C);

} // namespace zform

#endif
