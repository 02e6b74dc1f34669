#include "zform/oracles.hpp"

#include <cmath>

namespace zform {

Mat eval_metric(const Chart &chart, const std::vector<double> &x) {
  auto params = chart.default_params();
  Mat g(chart.dim, std::vector<double>(chart.dim, 0.0));
  for (int i = 0; i < chart.dim; ++i)
    for (int j = 0; j < chart.dim; ++j) g[i][j] = chart.metric[i][j].eval(x, params);
  return g;
}

double numeric_det(Mat m) {
  int n = static_cast<int>(m.size());
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      double f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Mat numeric_inverse(Mat m) {
  int n = static_cast<int>(m.size());
  Mat inv(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) throw std::runtime_error("numeric_inverse: singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    double d = m[c][c];
    for (int k = 0; k < n; ++k) {
      m[c][k] /= d;
      inv[c][k] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = m[r][c];
      if (f == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

std::vector<Mat> fd_christoffel(const Chart &chart, const std::vector<double> &x,
                                double h) {
  int D = chart.dim;
  // dg[l][i][j] = d_l g_{ij} by central difference
  std::vector<Mat> dg(D);
  for (int l = 0; l < D; ++l) {
    auto xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    Mat gp = eval_metric(chart, xp), gm = eval_metric(chart, xm);
    dg[l].assign(D, std::vector<double>(D, 0.0));
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) dg[l][i][j] = (gp[i][j] - gm[i][j]) / (2 * h);
  }
  Mat ginv = numeric_inverse(eval_metric(chart, x));
  std::vector<Mat> G(D, Mat(D, std::vector<double>(D, 0.0)));
  for (int rho = 0; rho < D; ++rho)
    for (int nu = 0; nu < D; ++nu)
      for (int mu = 0; mu < D; ++mu) {
        double s = 0.0;
        for (int lam = 0; lam < D; ++lam)
          s += ginv[rho][lam] * (dg[nu][lam][mu] + dg[mu][lam][nu] - dg[lam][nu][mu]);
        G[rho][nu][mu] = 0.5 * s;
      }
  return G;
}

std::vector<std::vector<Mat>> fd_riemann(const Chart &chart,
                                         const std::vector<double> &x,
                                         double hInner, double hOuter) {
  int D = chart.dim;
  // dG[m][rho][nu][sig] = d_m Gamma^rho_{nu sig}
  std::vector<std::vector<Mat>> dG(D);
  for (int m = 0; m < D; ++m) {
    // 5-point stencil keeps the outer truncation error at O(h^4)
    auto shifted = [&](double delta) {
      auto xs = x;
      xs[m] += delta;
      return fd_christoffel(chart, xs, hInner);
    };
    auto Gp2 = shifted(2 * hOuter), Gp = shifted(hOuter);
    auto Gm = shifted(-hOuter), Gm2 = shifted(-2 * hOuter);
    dG[m].assign(D, Mat(D, std::vector<double>(D, 0.0)));
    for (int rho = 0; rho < D; ++rho)
      for (int nu = 0; nu < D; ++nu)
        for (int sig = 0; sig < D; ++sig)
          dG[m][rho][nu][sig] =
              (Gm2[rho][nu][sig] - 8 * Gm[rho][nu][sig] + 8 * Gp[rho][nu][sig] -
               Gp2[rho][nu][sig]) /
              (12 * hOuter);
  }
  auto G = fd_christoffel(chart, x, hInner);
  std::vector<std::vector<Mat>> R(D, std::vector<Mat>(D, Mat(D, std::vector<double>(D, 0.0))));
  for (int rho = 0; rho < D; ++rho)
    for (int sig = 0; sig < D; ++sig)
      for (int mu = 0; mu < D; ++mu)
        for (int nu = 0; nu < D; ++nu) {
          double r = dG[mu][rho][nu][sig] - dG[nu][rho][mu][sig];
          for (int lam = 0; lam < D; ++lam)
            r += G[rho][mu][lam] * G[lam][nu][sig] - G[rho][nu][lam] * G[lam][mu][sig];
          R[rho][sig][mu][nu] = r;
        }
  return R;
}

CurtrightOracle curtright_oracle(const Element &Cform) {
  const AlgebraPtr &alg = Cform.algebra();
  int D = alg->dim();
  CurtrightOracle o;
  o.D = D;
  auto d3 = [D](auto init) {
    return std::vector(D, std::vector(D, std::vector(D, init)));
  };
  o.C = d3(Expr());
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b)
      for (int c = 0; c < D; ++c) o.C[a][b][c] = component(Cform, {{a, b}, {c}});

  o.F.assign(D, d3(Expr()));
  for (int l = 0; l < D; ++l)
    for (int m = 0; m < D; ++m)
      for (int n = 0; n < D; ++n)
        for (int r = 0; r < D; ++r)
          o.F[l][m][n][r] =
              o.C[m][n][r].diff(l) + o.C[n][l][r].diff(m) + o.C[l][m][r].diff(n);

  o.E.assign(D, std::vector(D, d3(Expr())));
  for (int l = 0; l < D; ++l)
    for (int m = 0; m < D; ++m)
      for (int n = 0; n < D; ++n)
        for (int r = 0; r < D; ++r)
          for (int w = 0; w < D; ++w)
            o.E[l][m][n][r][w] = o.F[l][m][n][r].diff(w) - o.F[l][m][n][w].diff(r);

  ExprMatrix eta_inv = symbolic_inverse(alg->chart()->metric);
  o.ricci = d3(Expr());
  for (int m = 0; m < D; ++m)
    for (int n = 0; n < D; ++n)
      for (int r = 0; r < D; ++r) {
        Expr s = Expr::integer(0);
        for (int a = 0; a < D; ++a)
          for (int b = 0; b < D; ++b) {
            if (eta_inv[a][b].is_zero()) continue;
            s = s + eta_inv[a][b] * o.E[a][m][n][b][r];
          }
        o.ricci[m][n][r] = -s;
      }

  o.trace.assign(D, Expr());
  for (int n = 0; n < D; ++n) {
    Expr s = Expr::integer(0);
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        if (eta_inv[a][b].is_zero()) continue;
        s = s + eta_inv[a][b] * o.ricci[a][n][b];
      }
    o.trace[n] = -s;
  }
  return o;
}

} // namespace zform
