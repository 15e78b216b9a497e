#pragma once
// Numeric differential geometry on a MetricModel: Levi-Civita
// connection, curvature, Laplace-Beltrami operator, second fundamental
// form of the s-level foliation, and pullback verification of chart maps.
//
// Conventions (pinned by the half-plane golden values in the tests):
//   Gamma^k_ij = (1/2) g^{kl} (d_i g_lj + d_j g_il - d_l g_ij)
//   R^l_ijk    = d_i Gamma^l_jk - d_j Gamma^l_ik
//                + Gamma^l_ip Gamma^p_jk - Gamma^l_jp Gamma^p_ik
//   R(X,Y,Z,W) = g_lm R^m_ijk X^i Y^j Z^k W^l   (lowered on the last slot)
//   sec(X,Y)   = R(X,Y,Y,X) / (|X|^2 |Y|^2 - <X,Y>^2)   (= -1 on RH^n)
//   Delta f    = -g^ij (d2_ij f - Gamma^k_ij d_k f)     (positive Laplacian,
//                Delta(log x1) = 1 on the half-plane)

#include <functional>

#include "halfspace/models.hpp"

namespace hs {

using ScalarField = std::function<double(const ChartPoint&)>;
using ChartMap = std::function<ChartPoint(const ChartPoint&)>;

struct CurvatureAtPoint {
  std::vector<Eigen::MatrixXd> christoffel;  // christoffel[k](i,j) = Gamma^k_ij
  std::vector<double> riemann;               // lowered, flat index ((i*d+j)*d+k)*d+l
  Eigen::MatrixXd ricci;
  double scalar = 0;
  int dim = 0;
  double r(int i, int j, int k, int l) const {
    return riemann[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
  }
};

struct FoliationData {
  Eigen::MatrixXd slice_metric;       // g_s
  Eigen::MatrixXd second_fundamental; // II = -(1/2) d_s g_s
  Eigen::MatrixXd shape_operator;     // g_s^{-1} II
  double mean_curvature = 0;          // tr(shape_operator)
};

struct PullbackReport {
  double max_deviation = 0;
  int used = 0;
  int skipped = 0;
};

// First derivatives of the metric components (analytic when the model
// provides them, 4th-order central differences otherwise).
std::vector<Eigen::MatrixXd> metric_derivatives(const MetricModel& model,
                                                const ChartPoint& p);

std::vector<Eigen::MatrixXd> christoffel(const MetricModel& model,
                                         const ChartPoint& p);

CurvatureAtPoint curvature(const MetricModel& model, const ChartPoint& p);

double sectional_curvature(const MetricModel& model, const ChartPoint& p,
                           const Eigen::VectorXd& X, const Eigen::VectorXd& Y);

double laplace_beltrami(const MetricModel& model, const ScalarField& f,
                        const ChartPoint& p);

// df as a covector (4th-order finite differences).
Eigen::VectorXd differential(const ScalarField& f, const ChartPoint& p);

// g^{ij} a_i b_j at p.
double cometric_inner(const MetricModel& model, const ChartPoint& p,
                      const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Foliation by level sets of the first coordinate (Bisector: s,
// RealFermi: r); throws std::invalid_argument for other charts.
FoliationData second_fundamental_form(const MetricModel& model,
                                      const ChartPoint& p);
double mean_curvature(const MetricModel& model, const ChartPoint& p);

// Max over points of |J^T g_target(Phi(p)) J - g_source(p)| entrywise,
// with J the finite-difference Jacobian of the map.  Points where either
// metric evaluation fails are counted in `skipped`.
PullbackReport pullback_check(const ChartMap& map, const MetricModel& source,
                              const MetricModel& target,
                              const std::vector<ChartPoint>& points);

}  // namespace hs
