#include "halfspace/chart.hpp"

#include <cmath>

namespace hs {

int chart_dim(Chart c, int par) {
  switch (c) {
    case Chart::UpperHalfReal: return par;
    case Chart::RealFermi: return par;
    case Chart::Siegel: return 2 * par;
    case Chart::Bisector: return 2 * par;  // (s, tau, rho) + (2m-3) sphere coords
    case Chart::UVRho: return 3;
  }
  throw std::logic_error("unknown chart");
}

namespace {
ChartPoint make(Chart c, int par, Eigen::VectorXd v) {
  ChartPoint p;
  p.chart = c;
  p.par = par;
  p.x = std::move(v);
  if (p.x.size() != chart_dim(c, par))
    throw std::invalid_argument("chart point has wrong dimension");
  return p;
}
}  // namespace

ChartPoint ChartPoint::upper_half_real(int n, Eigen::VectorXd v) {
  if (n < 2) throw std::invalid_argument("upper half-space needs n >= 2");
  return make(Chart::UpperHalfReal, n, std::move(v));
}
ChartPoint ChartPoint::real_fermi(int n, Eigen::VectorXd v) {
  if (n < 3) throw std::invalid_argument("Fermi chart needs n >= 3");
  return make(Chart::RealFermi, n, std::move(v));
}
ChartPoint ChartPoint::siegel(int m, Eigen::VectorXd v) {
  if (m < 2) throw std::invalid_argument("Siegel chart needs m >= 2");
  return make(Chart::Siegel, m, std::move(v));
}
ChartPoint ChartPoint::bisector(int m, Eigen::VectorXd v) {
  if (m < 2) throw std::invalid_argument("bisector chart needs m >= 2");
  return make(Chart::Bisector, m, std::move(v));
}
ChartPoint ChartPoint::uvrho(int m, Eigen::VectorXd v) {
  if (m < 2) throw std::invalid_argument("uv chart needs m >= 2");
  return make(Chart::UVRho, m, std::move(v));
}

bool ChartPoint::valid() const {
  switch (chart) {
    case Chart::UpperHalfReal: return x[0] > 0;
    case Chart::RealFermi: return x[1] > 0;
    case Chart::Siegel: return x[0] > 0;
    case Chart::Bisector: return x[2] > 0;
    case Chart::UVRho: return x[0] > 0 && x[0] <= 1 && x[1] > 0 && x[1] <= 1 && x[2] > 0;
  }
  return false;
}

void ChartPoint::require_valid() const {
  if (!valid()) throw std::domain_error("point outside chart validity domain");
}

Eigen::VectorXd siegel_to_z(const ChartPoint& p) {
  const int m = p.par;
  Eigen::VectorXd z(2 * m);
  double sq = 0;
  for (int i = 0; i < m - 1; ++i) {
    double re = p.x[2 + 2 * i], im = p.x[3 + 2 * i];
    z[2 * i] = re;
    z[2 * i + 1] = im;
    sq += re * re + im * im;
  }
  z[2 * m - 2] = p.x[0] + 0.25 * sq;  // Re z_m = f + |z'|^2/4
  z[2 * m - 1] = -p.x[1];             // Im z_m = -v
  return z;
}

ChartPoint siegel_from_z(int m, const Eigen::VectorXd& z) {
  Eigen::VectorXd v(2 * m);
  double sq = 0;
  for (int i = 0; i < m - 1; ++i) {
    v[2 + 2 * i] = z[2 * i];
    v[3 + 2 * i] = z[2 * i + 1];
    sq += z[2 * i] * z[2 * i] + z[2 * i + 1] * z[2 * i + 1];
  }
  v[0] = z[2 * m - 2] - 0.25 * sq;
  v[1] = -z[2 * m - 1];
  return ChartPoint::siegel(m, v);
}

void sphere_embed(int m, const Eigen::VectorXd& w, Eigen::VectorXd& y,
                  Eigen::MatrixXd& dy) {
  const int k = 2 * m - 3;   // chart dimension
  const int a = 2 * m - 2;   // ambient dimension
  if (w.size() != k) throw std::invalid_argument("sphere chart has wrong dimension");
  y.resize(a);
  dy.resize(a, k);
  if (m == 2) {
    // unit circle, y = exp(i beta)
    double b = w[0];
    y << std::cos(b), std::sin(b);
    dy(0, 0) = -std::sin(b);
    dy(1, 0) = std::cos(b);
    return;
  }
  // stereographic chart of S^{a-1}: w -> (2w, 1-|w|^2)/(1+|w|^2)
  double n2 = w.squaredNorm();
  double D = 1.0 + n2;
  for (int j = 0; j < a - 1; ++j) y[j] = 2.0 * w[j] / D;
  y[a - 1] = (1.0 - n2) / D;
  for (int c = 0; c < k; ++c) {
    for (int j = 0; j < a - 1; ++j)
      dy(j, c) = (2.0 * (j == c ? 1.0 : 0.0) * D - 4.0 * w[j] * w[c]) / (D * D);
    dy(a - 1, c) = -4.0 * w[c] / (D * D);
  }
}

}  // namespace hs
