#pragma once
// Independent numeric oracle for the radial model ODE
//   -phi'' - H phi' + lambda phi + cq phi^2 = f(s).
// Two entry points: a Dirichlet finite-difference BVP (Newton +
// Richardson extrapolation) for moderate intervals, and a rescaled
// backward integration that compares a numeric solution against a series
// approximation phi_K under the decay condition at the right endpoint.

#include <functional>

#include "halfspace/series.hpp"

namespace hs {

struct RadialODE {
  double H = 3.0;
  double lambda = 0.0;
  double cq = 0.0;
  std::function<double(double)> f;
};

struct BvpSolution {
  std::vector<double> s;    // uniform grid
  std::vector<double> phi;  // Richardson-extrapolated values
  double newton_residual = 0;
  double richardson_error = 0;  // |fine - coarse| estimate
  bool converged = false;
};

BvpSolution solve_dirichlet_bvp(const RadialODE& ode, double a, double b,
                                double va, double vb, int n);

struct DecayComparison {
  std::vector<double> s;  // fit window samples
  std::vector<double> D;  // D(s) = e^{omega s} (phi_num - phi_base)
  double slope = 0;       // least-squares slope of log|phi_num - phi_base|
  double ode_residual = 0;
  bool converged = false;
};

// Solves for the rescaled difference D = e^{omega s}(phi - phi_base),
// where phi_base is a series approximation whose residual
// R = f - I(phi_base) - cq phi_base^2 has weight floor omega.  The decay
// condition at s_right selects the bounded solution: the equation for D
// has both homogeneous modes growing to the right, so it is integrated
// backwards from asymptotic terminal data; the value at s_left is an
// output.  The slope is fitted on [fit_lo, fit_hi].
DecayComparison decay_difference_solve(const RadialODE& ode,
                                       const PolySeries& phi_base,
                                       const PolySeries& minus_residual,
                                       double omega, double fit_lo,
                                       double fit_hi, double s_right);

}  // namespace hs
