#include "halfspace/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hs {

namespace {

// One Newton solve of the finite-difference system on a fixed grid.
std::vector<double> newton_fd(const RadialODE& ode, double a, double b,
                              double va, double vb, int n, double* res_out) {
  const double h = (b - a) / n;
  std::vector<double> phi(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    double t = static_cast<double>(i) / n;
    phi[i] = (1 - t) * va + t * vb;  // linear initial guess
  }
  std::vector<double> lower(n + 1), diag(n + 1), upper(n + 1), rhs(n + 1);
  double residual = 0;
  for (int iter = 0; iter < 50; ++iter) {
    residual = 0;
    for (int i = 1; i < n; ++i) {
      double d2 = (phi[i + 1] - 2 * phi[i] + phi[i - 1]) / (h * h);
      double d1 = (phi[i + 1] - phi[i - 1]) / (2 * h);
      double Fi = -d2 - ode.H * d1 + ode.lambda * phi[i] +
                  ode.cq * phi[i] * phi[i] - ode.f(a + i * h);
      rhs[i] = -Fi;
      residual = std::max(residual, std::abs(Fi));
      lower[i] = -1.0 / (h * h) + ode.H / (2 * h);
      diag[i] = 2.0 / (h * h) + ode.lambda + 2 * ode.cq * phi[i];
      upper[i] = -1.0 / (h * h) - ode.H / (2 * h);
    }
    if (residual < 1e-12) break;
    // Thomas solve for the interior update (Dirichlet ends fixed).
    std::vector<double> cp(n + 1), dp(n + 1);
    cp[1] = upper[1] / diag[1];
    dp[1] = rhs[1] / diag[1];
    for (int i = 2; i < n; ++i) {
      double m = diag[i] - lower[i] * cp[i - 1];
      cp[i] = upper[i] / m;
      dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / m;
    }
    std::vector<double> du(n + 1, 0.0);
    du[n - 1] = dp[n - 1];
    for (int i = n - 2; i >= 1; --i) du[i] = dp[i] - cp[i] * du[i + 1];
    for (int i = 1; i < n; ++i) phi[i] += du[i];
  }
  if (res_out) *res_out = residual;
  return phi;
}

}  // namespace

BvpSolution solve_dirichlet_bvp(const RadialODE& ode, double a, double b,
                                double va, double vb, int n) {
  if (n < 16 || n % 2) throw std::invalid_argument("grid size must be even and >= 16");
  double res_c = 0, res_f = 0;
  std::vector<double> coarse = newton_fd(ode, a, b, va, vb, n, &res_c);
  std::vector<double> fine = newton_fd(ode, a, b, va, vb, 2 * n, &res_f);
  BvpSolution out;
  out.s.resize(n + 1);
  out.phi.resize(n + 1);
  out.richardson_error = 0;
  for (int i = 0; i <= n; ++i) {
    out.s[i] = a + (b - a) * i / n;
    // second-order scheme: h^2 Richardson extrapolation
    out.phi[i] = (4 * fine[2 * i] - coarse[i]) / 3.0;
    out.richardson_error =
        std::max(out.richardson_error, std::abs(fine[2 * i] - coarse[i]));
  }
  out.newton_residual = std::max(res_c, res_f);
  out.converged = out.newton_residual < 1e-8;
  return out;
}

DecayComparison decay_difference_solve(const RadialODE& ode,
                                       const PolySeries& phi_base,
                                       const PolySeries& minus_residual,
                                       double omega, double fit_lo,
                                       double fit_hi, double s_right) {
  // D = e^{omega s}(phi - phi_base) satisfies
  //   -D'' + (2 omega - H) D' + (-omega^2 + H omega + lambda) D
  //     + 2 cq phi_base D + cq e^{-omega s} D^2 = e^{omega s} R(s)
  // with R = -F(phi_base) given as a series of weight floor >= omega.
  const double c0 = -omega * omega + ode.H * omega + ode.lambda;
  auto rhs = [&](double s) { return minus_residual.evaluate_shifted(s, omega); };
  auto deriv = [&](double s, double D, double Dp, double* dD, double* dDp) {
    *dD = Dp;
    // D'' = (2 omega - H) D' + (c0 + 2 cq phi_base) D + cq e^{-omega s} D^2 - rhs
    double lin = c0 + 2 * ode.cq * phi_base.evaluate(s);
    *dDp = (2 * omega - ode.H) * Dp + lin * D +
           ode.cq * std::exp(-omega * s) * D * D - rhs(s);
  };
  // Terminal data at s_right from the zeroth-order balance; the error it
  // makes decays backwards along both homogeneous modes.
  double lin_r = c0 + 2 * ode.cq * phi_base.evaluate(s_right);
  double D = rhs(s_right) / lin_r;
  double Dp = 0.0;

  DecayComparison out;
  const double h = 1e-3;
  double s = s_right;
  auto rk4 = [&](double step) {
    double k1d, k1p, k2d, k2p, k3d, k3p, k4d, k4p;
    deriv(s, D, Dp, &k1d, &k1p);
    deriv(s + step / 2, D + step / 2 * k1d, Dp + step / 2 * k1p, &k2d, &k2p);
    deriv(s + step / 2, D + step / 2 * k2d, Dp + step / 2 * k2p, &k3d, &k3p);
    deriv(s + step, D + step * k3d, Dp + step * k3p, &k4d, &k4p);
    D += step / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
    Dp += step / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    s += step;
  };
  std::vector<double> ss, dd, pp;
  while (s > fit_lo - h / 2) {
    if (s <= fit_hi + 1e-9) {
      ss.push_back(s);
      dd.push_back(D);
      pp.push_back(Dp);
    }
    rk4(-h);
  }
  // Residual of the first-order system re-evaluated on stored samples.
  double worst = 0;
  for (size_t i = 2; i + 2 < ss.size(); i += 50) {
    // derivative of D from neighbors (stored descending in s, spacing h)
    double d1 = (8 * (dd[i - 1] - dd[i + 1]) - (dd[i - 2] - dd[i + 2])) / (12 * h);
    double dDv, dDpv;
    deriv(ss[i], dd[i], pp[i], &dDv, &dDpv);
    double d1p = (8 * (pp[i - 1] - pp[i + 1]) - (pp[i - 2] - pp[i + 2])) / (12 * h);
    worst = std::max(worst, std::abs(d1 - dDv));
    worst = std::max(worst, std::abs(d1p - dDpv));
  }
  out.ode_residual = worst;
  // Least-squares slope of log|phi_num - phi_base| = -omega s + log|D|.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (size_t i = 0; i < ss.size(); ++i) {
    if (std::abs(dd[i]) < 1e-280) continue;
    double x = ss[i], y = -omega * x + std::log(std::abs(dd[i]));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
    out.s.push_back(ss[i]);
    out.D.push_back(dd[i]);
  }
  if (cnt < 8) throw std::runtime_error("decay solve produced too few samples");
  out.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  out.converged = worst < 1e-8;
  return out;
}

}  // namespace hs
