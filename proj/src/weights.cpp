#include "halfspace/weights.hpp"

#include <cmath>
#include <sstream>

namespace hs {

namespace {

// Slice coordinates of a real-kind point: s is the Fermi coordinate r,
// rho the hyperbolic distance in the slice RH^{n-1} from the reference
// point xi0 = (1, 0, ..., 0):  cosh(rho) = 1 + |xi - xi0|^2 / (2 xi1).
void real_coords(const ChartPoint& p, double* s, double* cosh_rho) {
  if (p.chart != Chart::RealFermi)
    throw std::invalid_argument("real weight expects a Fermi-chart point");
  *s = p.x[0];
  const int n = p.par;
  double d2 = (p.x[1] - 1.0) * (p.x[1] - 1.0);
  for (int i = 2; i < n; ++i) d2 += p.x[i] * p.x[i];
  *cosh_rho = 1.0 + d2 / (2.0 * p.x[1]);
}

double sq(double v) { return v * v; }

}  // namespace

void require_admissible(const WeightSpec& spec) {
  std::ostringstream bad;
  if (spec.kind == WeightSpec::Kind::Real) {
    const double n = spec.par;
    if (!(spec.delta1 > 0)) bad << "requires 0 < delta1";
    else if (!(spec.delta1 < n - 1)) bad << "requires delta1 < n-1 = " << n - 1;
    else if (!(spec.delta2 >= 0)) bad << "requires 0 <= delta2";
    else if (!(spec.delta2 <= n - 2)) bad << "requires delta2 <= n-2 = " << n - 2;
  } else {
    const double m = spec.par;
    if (!(spec.delta1 > 0)) bad << "requires 0 < delta1";
    else if (!(spec.delta1 < m)) bad << "requires delta1 < m = " << m;
    else if (!(spec.delta2 >= 0)) bad << "requires 0 <= delta2";
    else if (!(spec.delta2 <= m - 0.5)) bad << "requires delta2 <= m-1/2 = " << m - 0.5;
    else if (spec.par == 2 && !(spec.delta2 <= 1.25)) bad << "requires delta2 <= 5/4 when m = 2";
  }
  if (!bad.str().empty()) throw std::invalid_argument("weight spec out of range: " + bad.str());
}

double log_weight(const WeightSpec& spec, const ChartPoint& p) {
  if (spec.kind == WeightSpec::Kind::Real) {
    double s, chr;
    real_coords(p, &s, &chr);
    return spec.delta1 * std::log(std::cosh(s)) + spec.delta2 * std::log(chr);
  }
  if (p.chart != Chart::Bisector)
    throw std::invalid_argument("complex weight expects a bisector-chart point");
  double s = p.x[0], tau = p.x[1], rho = p.x[2];
  return 2.0 * spec.delta1 * std::log(std::cosh(s / 2)) +
         spec.delta2 * (2.0 * std::log(std::cosh(rho / 2)) +
                        std::log(std::cosh(tau / 2)));
}

double weight_value(const WeightSpec& spec, const ChartPoint& p) {
  return std::exp(log_weight(spec, p));
}

double weight_functional_closed(const WeightSpec& spec, const ChartPoint& p) {
  const double d1 = spec.delta1, d2 = spec.delta2;
  if (spec.kind == WeightSpec::Kind::Real) {
    const double n = spec.par;
    double s, chr;
    real_coords(p, &s, &chr);
    double t2s = sq(std::tanh(s));
    double t2r = 1.0 - 1.0 / sq(chr);
    // Slice part: rho is the polar radius of RH^{n-1}, so the slice
    // Laplacian carries (n-2) coth(rho) and the second line is
    // (n-1) - (1+d2) tanh^2(rho), vanishing only as rho -> infinity
    // when d2 = n-2.
    return d1 * (1.0 + (n - 2 - d1) * t2s) +
           d2 / sq(std::cosh(s)) * (n - 1.0 - (1.0 + d2) * t2r);
  }
  const double m = spec.par;
  double s = p.x[0], tau = p.x[1], rho = p.x[2];
  double pp = sq(std::tanh(s / 2)), vv = sq(std::tanh(rho / 2));
  double den = 1.0 + pp * (1.0 - vv);
  double u1 = d1 * (0.5 + (m - 0.5 - d1) * pp +
                    pp * (1.0 - pp) * (1.0 - vv) / den);
  double u2 = d2 * (1.0 - pp) *
              (m - 1.0 + (0.5 - d2) * vv - pp * vv * (1.0 - vv) / den);
  // |d tau|^2 in the bisector metric, and the exact tau-dependent third
  // term; its infimum over tau is the grid functional's third line.
  double dtau2 = (1.0 - pp) * (1.0 - vv) * (1.0 - pp * (1.0 - vv)) / sq(den);
  double u3 = dtau2 * (d2 / 4.0) *
              ((1.0 + d2) / sq(std::cosh(tau / 2)) - d2);
  return u1 + u2 + u3;
}

double weight_functional_grid(const WeightSpec& spec, double a, double b) {
  const double d1 = spec.delta1, d2 = spec.delta2;
  if (spec.kind == WeightSpec::Kind::Real) {
    const double n = spec.par;
    return d1 * (1.0 + (n - 2 - d1) * a) +
           d2 * (1.0 - a) * (n - 1.0 - (1.0 + d2) * b);
  }
  const double m = spec.par;
  double den = 1.0 + a * (1.0 - b);
  double u1 = d1 * (0.5 + (m - 0.5 - d1) * a + a * (1.0 - a) * (1.0 - b) / den);
  double u2 = d2 * (1.0 - a) * (m - 1.0 + (0.5 - d2) * b - a * b * (1.0 - b) / den);
  double u3 = -sq(d2) / 4.0 * (1.0 - a) * (1.0 - b) * (1.0 - a * (1.0 - b)) / sq(den);
  return u1 + u2 + u3;
}

double weight_functional_numeric(const WeightSpec& spec, const ChartPoint& p,
                                 const MetricModel& model) {
  ScalarField u = [&spec](const ChartPoint& q) { return log_weight(spec, q); };
  Eigen::VectorXd du = differential(u, p);
  return -laplace_beltrami(model, u, p) - cometric_inner(model, p, du, du);
}

ScanReport certify_positivity(const WeightSpec& spec, double resolution) {
  require_admissible(spec);
  ScanReport rep;
  rep.resolution = resolution;
  rep.domain = spec.kind == WeightSpec::Kind::Real
                   ? "(tanh^2 s, tanh^2 rho) in [0, 1-eps]^2"
                   : "(tanh^2(s/2), tanh^2(rho/2)) in [0, 1-eps]^2, inf over tau";
  const double top = 1.0 - rep.epsilon;
  bool first = true;
  auto visit = [&](double a, double b) {
    double v = weight_functional_grid(spec, a, b);
    if (first || v < rep.infimum) {
      rep.infimum = v;
      rep.arg_a = a;
      rep.arg_b = b;
      first = false;
    }
  };
  for (double a = 0;; a += resolution) {
    bool last_a = a >= top;
    double aa = last_a ? top : a;
    for (double b = 0;; b += resolution) {
      bool last_b = b >= top;
      visit(aa, last_b ? top : b);
      if (last_b) break;
    }
    if (last_a) break;
  }
  rep.pass = rep.infimum > 0;
  return rep;
}

ShiftReport shifted_interval(const WeightSpec& spec, double lambda,
                             double resolution) {
  if (lambda < 0)
    throw std::invalid_argument(
        "lambda < 0 unsupported: the shifted weight interval is only "
        "defined for lambda >= 0");
  const double H = spec.calH();
  ShiftReport rep;
  double disc = std::sqrt(H * H / 4.0 + lambda);
  rep.lo = H / 2.0 - disc;
  rep.hi = H / 2.0 + disc;
  rep.delta1_in_interval = spec.delta1 > rep.lo && spec.delta1 < rep.hi;
  const double top = 1.0 - 1e-3;
  bool first = true;
  for (double a = 0; a <= top + resolution; a += resolution) {
    double aa = std::min(a, top);
    for (double b = 0; b <= top + resolution; b += resolution) {
      double v = weight_functional_grid(spec, aa, std::min(b, top)) + lambda;
      if (first || v < rep.infimum) rep.infimum = v;
      first = false;
    }
  }
  rep.pass = rep.delta1_in_interval && rep.infimum > 0;
  return rep;
}

}  // namespace hs
