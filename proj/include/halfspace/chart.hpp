#pragma once
// Coordinate charts for the real and complex hyperbolic half-space models.
//
// Coordinate layouts (all real vectors):
//   UpperHalfReal(n): (x1, ..., xn), x1 > 0; the wall is {xn = 0}.
//   RealFermi(n):     (r, xi1, ..., xi_{n-1}), xi1 > 0; r is the signed
//                     distance to the wall, the slice is an upper
//                     half-space model of RH^{n-1}.
//   Siegel(m):        (f, v, Re z1, Im z1, ..., Re z_{m-1}, Im z_{m-1}),
//                     f > 0.  The last holomorphic coordinate is
//                     recovered as z_m = f + |z'|^2/4 - i v.
//   Bisector(m):      (s, tau, rho, w...), rho > 0, with w a chart on the
//                     sphere S^{2m-3}: a single angle beta for m = 2,
//                     stereographic coordinates (2m-3 of them) for m >= 3.
//   UVRho(m):         (u, v, varrho), u, v in (0, 1].

#include <Eigen/Dense>
#include <stdexcept>

namespace hs {

enum class Chart { UpperHalfReal, RealFermi, Siegel, Bisector, UVRho };

struct ChartPoint {
  Chart chart = Chart::UpperHalfReal;
  int par = 2;  // n (real charts) or m (complex charts)
  Eigen::VectorXd x;

  static ChartPoint upper_half_real(int n, Eigen::VectorXd v);
  static ChartPoint real_fermi(int n, Eigen::VectorXd v);
  static ChartPoint siegel(int m, Eigen::VectorXd v);
  static ChartPoint bisector(int m, Eigen::VectorXd v);
  static ChartPoint uvrho(int m, Eigen::VectorXd v);

  int dim() const { return static_cast<int>(x.size()); }
  bool valid() const;
  void require_valid() const;  // throws std::domain_error
};

// Expected coordinate-vector length for a chart.
int chart_dim(Chart c, int par);

// Siegel helpers: translate between the chart vector and the m complex
// coordinates stored as real pairs (Re z1, Im z1, ..., Re zm, Im zm).
Eigen::VectorXd siegel_to_z(const ChartPoint& p);
ChartPoint siegel_from_z(int m, const Eigen::VectorXd& z_pairs);

// Embedding of the sphere chart: w (size 2m-3) -> y on S^{2m-3} as
// complex pairs (size 2m-2), together with the differential dy (rows:
// ambient components, cols: chart directions).
void sphere_embed(int m, const Eigen::VectorXd& w, Eigen::VectorXd& y,
                  Eigen::MatrixXd& dy);

}  // namespace hs
