#pragma once
// Double-weight functions on the half-space models, closed-form
// evaluation of -Delta log w - |d log w|^2, grid positivity
// certificates, and the shifted (lambda > 0) admissibility interval.

#include "halfspace/tensor.hpp"

namespace hs {

struct WeightSpec {
  enum class Kind { Real, Complex };
  Kind kind = Kind::Real;
  int par = 3;  // n (real) or m (complex)
  double delta1 = 1.0;
  double delta2 = 0.0;

  double calH() const { return kind == Kind::Real ? par - 1.0 : par; }
};

// Throws std::invalid_argument naming the violated inequality.
void require_admissible(const WeightSpec& spec);

// w at a point: RealFermi chart for the real kind (s = r, rho = slice
// distance to the reference boundary point (1, 0, ..., 0)), Bisector
// chart for the complex kind.
double weight_value(const WeightSpec& spec, const ChartPoint& p);
double log_weight(const WeightSpec& spec, const ChartPoint& p);

// Exact closed form of -Delta log w - |d log w|^2 at the point (the
// complex case keeps the full tau dependence; its infimum over tau is
// the grid functional below).
double weight_functional_closed(const WeightSpec& spec, const ChartPoint& p);

// Closed form on the scan grid: arguments are (tanh^2 s, tanh^2 rho) for
// the real kind and (p, varpi) = (tanh^2(s/2), tanh^2(rho/2)) for the
// complex kind; the complex value is the infimum over tau.
double weight_functional_grid(const WeightSpec& spec, double a, double b);

// Numeric cross-check through the tensor engine on the matching model.
double weight_functional_numeric(const WeightSpec& spec, const ChartPoint& p,
                                 const MetricModel& model);

struct ScanReport {
  double infimum = 0;
  double arg_a = 0, arg_b = 0;  // grid argmin
  double resolution = 0;
  double epsilon = 1e-3;
  std::string domain;
  bool pass = false;
};

ScanReport certify_positivity(const WeightSpec& spec, double resolution);

struct ShiftReport {
  double lo = 0, hi = 0;  // open interval for delta1
  bool delta1_in_interval = false;
  double infimum = 0;  // of functional + lambda over the grid
  bool pass = false;
};

// lambda >= 0; lambda < 0 throws std::invalid_argument (unsupported).
ShiftReport shifted_interval(const WeightSpec& spec, double lambda,
                             double resolution = 1e-2);

}  // namespace hs
