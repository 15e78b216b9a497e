#pragma once
// Closed-form hyperbolic metrics in each chart, the coordinate maps
// between charts, the model inversion in each chart, and the complex
// structure on the bisector chart.

#include <functional>
#include <optional>

#include "halfspace/chart.hpp"

namespace hs {

struct MetricModel {
  Chart chart;
  int par;  // n or m
  int dim;  // matrix size
  std::function<Eigen::MatrixXd(const ChartPoint&)> evaluate;
  // Optional analytic first derivatives: d[k] = d g / d x_k.
  std::function<std::vector<Eigen::MatrixXd>(const ChartPoint&)> d_metric;
};

// Metric evaluators (throw std::domain_error outside the chart domain).
Eigen::MatrixXd metric_upper_half_real(const ChartPoint& p);
Eigen::MatrixXd metric_real_fermi(const ChartPoint& p);
Eigen::MatrixXd metric_siegel(const ChartPoint& p);
Eigen::MatrixXd metric_bisector(const ChartPoint& p);

MetricModel upper_half_real_model(int n);  // ships analytic derivatives
MetricModel real_fermi_model(int n);
MetricModel siegel_model(int m);
MetricModel bisector_model(int m);

// Chart maps.
ChartPoint bisector_to_siegel(const ChartPoint& p);
ChartPoint real_fermi_to_upper_half(const ChartPoint& p);
ChartPoint uv_dictionary(const ChartPoint& p);
// Restores (s, tau, rho) with s >= 0; sphere coordinates are set to the
// chart reference values (the dictionary does not involve them).
ChartPoint uv_dictionary_inverse(const ChartPoint& p, int m);

// Model inversion in each chart: (s, tau) -> (-s, -tau) on the bisector,
// z -> (z'/z_m, 1/z_m) on the Siegel domain, xn -> -xn on the real
// half-space, r -> -r in Fermi coordinates.
ChartPoint inversion(const ChartPoint& p);

struct BisectorFrame {
  // Rows of `coframe` are an orthonormal coframe at p for the bisector
  // metric, ordered (ds, a2*theta2, a3*drho, a4*theta1, contact pairs...),
  // so coframe^T * coframe reproduces the metric matrix.
  Eigen::MatrixXd coframe;
  Eigen::RowVectorXd theta;   // contact form in sphere-chart components
  Eigen::MatrixXd gamma_prime;  // metric on ker(theta), sphere-chart components
};

BisectorFrame bisector_frame(const ChartPoint& p);

// Complex structure as a matrix acting on coordinate tangent vectors;
// built from the orthonormal coframe by pairing (ds, theta2-dir),
// (drho, theta1-dir) and the contact pairs.
Eigen::MatrixXd complex_structure_J(const ChartPoint& p);

}  // namespace hs
