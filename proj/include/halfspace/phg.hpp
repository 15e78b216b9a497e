#pragma once
// The radial model operator, its integral right inverses G_0 / G_inf in
// closed form and by quadrature, and the iterative construction of
// polyhomogeneous approximate solutions of
//   -phi'' - H phi' + lambda phi + q(phi) = f .

#include <functional>

#include "halfspace/indicial.hpp"
#include "halfspace/series.hpp"

namespace hs {

struct RadialMode {
  Rational lambda;
  CriticalPair alpha;  // (alpha_-, alpha_+) = critical_pair(lambda, H)
};

struct RadialOperator {
  Rational calH;
  std::vector<RadialMode> modes;
  double s0 = 10.0;  // lower endpoint of the G_0 second integral

  static RadialOperator make(const Rational& calH,
                             const std::vector<Rational>& lambdas,
                             double s0 = 10.0);
};

// One series per mode.
using ModeSeries = std::vector<PolySeries>;

// Exact symbolic action of -d^2 - H d + lambda_i, modewise:
//   I(s^k e^{-t s}) = -(t-a+)(t-a-) s^k e^{-t s}
//                     + k (2t-H) s^{k-1} e^{-t s} - k(k-1) s^{k-2} e^{-t s},
// with the quadratic coefficient dropped exactly when t equals a critical
// weight structurally.
ModeSeries apply_indicial(const RadialOperator& op, const ModeSeries& u);
PolySeries apply_indicial_mode(const RadialOperator& op, int mode,
                               const PolySeries& u);

// Closed-form right inverses of d^2 + H d - lambda_i (so I(G u) = -u).
// G_inf requires every term weight > alpha_+ of the mode; G_0 requires
// alpha_- < tau <= alpha_+ and produces an s^{sigma+1} term exactly at
// structural resonance tau = alpha_+.
PolySeries G_inf(const RadialOperator& op, int mode, const PolySeries& u);
PolySeries G_0(const RadialOperator& op, int mode, const PolySeries& u);

struct ModelProblem {
  RadialOperator op;
  std::vector<double> cq;  // q_i(phi) = cq[i] * (sum_j phi_j)^2
  ModeSeries f;            // forcing, weight floor > mu_+
  std::vector<ExactWeight> generators;  // for the monoid N_L
};

struct IterationStep {
  ExactWeight rung;          // mu_+ + a_k
  ModeSeries psi;
  std::vector<char> branch;  // per mode: '0' (G_0), 'i' (G_inf), '-' (no input)
  std::vector<bool> resonant;
  std::optional<ExactWeight> residual_floor;  // floor of F(phi_k), if nonzero
  bool floor_ok = false;           // floor >= mu_+ + a_{k+1}
  bool floor_equals_next = false;  // floor == mu_+ + a_{k+1} structurally
};

struct PhgRun {
  ExactWeight mu_plus;
  std::vector<ExactWeight> ladder_values;  // a_0 .. a_{K+1}
  std::vector<IterationStep> steps;        // k = 0 .. K
  ModeSeries phi;                          // phi_K
  bool pass = false;
  std::string message;
};

PhgRun phg_iterate(const ModelProblem& problem, int K);

// F(phi) = I(phi) + q(phi) - f, modewise.
ModeSeries phg_residual(const ModelProblem& problem, const ModeSeries& phi);

struct QuadratureResult {
  std::vector<double> values;   // G(f) at the grid nodes
  double tail_slope = 0;        // measured decay rate of f
  double s_max = 0;             // truncation point
  double residual = 0;          // sup |(d^2 + H d - lambda) G(f) - f| (interior)
  bool ok = false;
  std::string message;
};

// Numeric realization of the G_inf branch for a sampled function; refuses
// when the measured tail decay of f is not faster than e^{-alpha_+ s}.
QuadratureResult G_quadrature(const RadialOperator& op, int mode,
                              const std::function<double(double)>& f,
                              const std::vector<double>& grid);

}  // namespace hs
