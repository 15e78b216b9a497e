#include "halfspace/models.hpp"

#include <cmath>
#include <complex>

namespace hs {

namespace {

void require_chart(const ChartPoint& p, Chart c) {
  if (p.chart != c) throw std::invalid_argument("point is in the wrong chart");
  p.require_valid();
}

// Multiplication by i on R^{2k} identified with C^k (consecutive pairs).
Eigen::VectorXd times_i(const Eigen::VectorXd& v) {
  Eigen::VectorXd r(v.size());
  for (int j = 0; j + 1 < v.size(); j += 2) {
    r[j] = -v[j + 1];
    r[j + 1] = v[j];
  }
  return r;
}

}  // namespace

Eigen::MatrixXd metric_upper_half_real(const ChartPoint& p) {
  require_chart(p, Chart::UpperHalfReal);
  const int n = p.par;
  return Eigen::MatrixXd::Identity(n, n) / (p.x[0] * p.x[0]);
}

MetricModel upper_half_real_model(int n) {
  MetricModel m;
  m.chart = Chart::UpperHalfReal;
  m.par = n;
  m.dim = n;
  m.evaluate = [](const ChartPoint& p) { return metric_upper_half_real(p); };
  m.d_metric = [n](const ChartPoint& p) {
    std::vector<Eigen::MatrixXd> d(n, Eigen::MatrixXd::Zero(n, n));
    double x1 = p.x[0];
    d[0] = Eigen::MatrixXd::Identity(n, n) * (-2.0 / (x1 * x1 * x1));
    return d;
  };
  return m;
}

Eigen::MatrixXd metric_real_fermi(const ChartPoint& p) {
  require_chart(p, Chart::RealFermi);
  const int n = p.par;
  double ch = std::cosh(p.x[0]);
  double xi1 = p.x[1];
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  g(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) g(i, i) = ch * ch / (xi1 * xi1);
  return g;
}

MetricModel real_fermi_model(int n) {
  MetricModel m;
  m.chart = Chart::RealFermi;
  m.par = n;
  m.dim = n;
  m.evaluate = [](const ChartPoint& p) { return metric_real_fermi(p); };
  m.d_metric = [n](const ChartPoint& p) {
    std::vector<Eigen::MatrixXd> d(n, Eigen::MatrixXd::Zero(n, n));
    double r = p.x[0], xi1 = p.x[1];
    double ch = std::cosh(r), sh = std::sinh(r);
    for (int i = 1; i < n; ++i) {
      d[0](i, i) = 2.0 * ch * sh / (xi1 * xi1);
      d[1](i, i) = -2.0 * ch * ch / (xi1 * xi1 * xi1);
    }
    return d;
  };
  return m;
}

Eigen::MatrixXd metric_siegel(const ChartPoint& p) {
  require_chart(p, Chart::Siegel);
  const int m = p.par;
  const int d = 2 * m;
  double f = p.x[0];
  // eta = dv + (1/2) Im(conj(z_i) dz_i) = dv + (1/2) sum (x_i dxi_i - xi_i dx_i)
  Eigen::RowVectorXd eta = Eigen::RowVectorXd::Zero(d);
  eta[1] = 1.0;
  for (int i = 0; i < m - 1; ++i) {
    double xr = p.x[2 + 2 * i], xi = p.x[3 + 2 * i];
    eta[2 + 2 * i] = -0.5 * xi;
    eta[3 + 2 * i] = 0.5 * xr;
  }
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
  g(0, 0) = 1.0 / (f * f);
  g += eta.transpose() * eta / (f * f);
  for (int j = 2; j < d; ++j) g(j, j) += 1.0 / f;
  return g;
}

MetricModel siegel_model(int m) {
  MetricModel mm;
  mm.chart = Chart::Siegel;
  mm.par = m;
  mm.dim = 2 * m;
  mm.evaluate = [](const ChartPoint& p) { return metric_siegel(p); };
  return mm;
}

BisectorFrame bisector_frame(const ChartPoint& p) {
  require_chart(p, Chart::Bisector);
  const int m = p.par;
  const int d = 2 * m;
  const int k = 2 * m - 3;
  const double s = p.x[0], rho = p.x[2];

  Eigen::VectorXd y;
  Eigen::MatrixXd dy;
  sphere_embed(m, p.x.tail(k), y, dy);
  Eigen::VectorXd iy = times_i(y);

  BisectorFrame fr;
  fr.theta = (iy.transpose() * dy).row(0);
  fr.gamma_prime = dy.transpose() * dy - fr.theta.transpose() * fr.theta;

  const double ths = std::tanh(s / 2), chs = std::cosh(s / 2);
  const double chr = std::cosh(rho / 2), shr = std::sinh(rho / 2);

  auto theta_full = [&](Eigen::RowVectorXd& row, double c) {
    row.segment(3, k) += c * fr.theta;
  };
  Eigen::RowVectorXd th1 = Eigen::RowVectorXd::Zero(d);
  th1[1] = ths / (2.0 * chr);
  theta_full(th1, 1.0);
  Eigen::RowVectorXd th2 = Eigen::RowVectorXd::Zero(d);
  th2[1] = 1.0 + ths * ths;
  theta_full(th2, 2.0 * shr * shr / chr * ths);

  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(d, d);
  E(0, 0) = 1.0;                                   // ds
  E.row(1) = chs * chs * chr * th2;                // theta2 direction
  E(2, 2) = chs;                                   // drho
  E.row(3) = chs * std::sinh(rho) * th1;           // theta1 direction
  // Contact pairs: an orthonormal basis (v, iv, ...) of the ambient
  // orthogonal complement of span{y, iy}, pulled back through dy.
  if (m >= 3) {
    const int a = 2 * m - 2;
    std::vector<Eigen::VectorXd> basis = {y, iy};
    int row = 4;
    for (int cand = 0; cand < a && row < d; ++cand) {
      Eigen::VectorXd v = Eigen::VectorXd::Unit(a, cand);
      for (const auto& b : basis) v -= b.dot(v) * b;
      if (v.norm() < 1e-6) continue;
      v.normalize();
      Eigen::VectorXd ivv = times_i(v);
      E.row(row).segment(3, k) = 2.0 * chs * shr * (v.transpose() * dy);
      E.row(row + 1).segment(3, k) = 2.0 * chs * shr * (ivv.transpose() * dy);
      basis.push_back(v);
      basis.push_back(ivv);
      row += 2;
    }
    if (row != d) throw std::runtime_error("contact frame construction failed");
  }
  fr.coframe = E;
  return fr;
}

Eigen::MatrixXd metric_bisector(const ChartPoint& p) {
  Eigen::MatrixXd E = bisector_frame(p).coframe;
  return E.transpose() * E;
}

MetricModel bisector_model(int m) {
  MetricModel mm;
  mm.chart = Chart::Bisector;
  mm.par = m;
  mm.dim = 2 * m;
  mm.evaluate = [](const ChartPoint& p) { return metric_bisector(p); };
  return mm;
}

Eigen::MatrixXd complex_structure_J(const ChartPoint& p) {
  Eigen::MatrixXd E = bisector_frame(p).coframe;
  const int d = static_cast<int>(E.rows());
  // On the orthonormal frame (F = E^{-1} columns): J F_{2a} = -F_{2a+1},
  // J F_{2a+1} = F_{2a}, so that on coframes J(ds) = +a2*theta2 etc.
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a + 1 < d; a += 2) {
    B(a + 1, a) = -1.0;
    B(a, a + 1) = 1.0;
  }
  Eigen::MatrixXd F = E.inverse();
  return F * B * E;
}

ChartPoint bisector_to_siegel(const ChartPoint& p) {
  require_chart(p, Chart::Bisector);
  const int m = p.par;
  const int k = 2 * m - 3;
  const double s = p.x[0], tau = p.x[1], rho = p.x[2];
  using C = std::complex<double>;
  Eigen::VectorXd y;
  Eigen::MatrixXd dy;
  sphere_embed(m, p.x.tail(k), y, dy);

  // t e^{i alpha/2} = 2 sinh(rho/2) / (cosh(rho/2) + i tanh(s/2))
  C c = 2.0 * std::sinh(rho / 2) / C(std::cosh(rho / 2), std::tanh(s / 2));
  double t = std::abs(c);
  double alpha = 2.0 * std::arg(c);
  C zm = std::exp(C(tau, alpha));
  C half = std::exp(C(tau / 2, alpha / 2));
  Eigen::VectorXd z(2 * m);
  for (int i = 0; i < m - 1; ++i) {
    C yi(y[2 * i], y[2 * i + 1]);
    C zi = half * t * yi;
    z[2 * i] = zi.real();
    z[2 * i + 1] = zi.imag();
  }
  z[2 * m - 2] = zm.real();
  z[2 * m - 1] = zm.imag();
  return siegel_from_z(m, z);
}

ChartPoint real_fermi_to_upper_half(const ChartPoint& p) {
  require_chart(p, Chart::RealFermi);
  const int n = p.par;
  double r = p.x[0], xi1 = p.x[1];
  Eigen::VectorXd x(n);
  x[0] = xi1 / std::cosh(r);
  for (int i = 2; i < n; ++i) x[i - 1] = p.x[i];
  x[n - 1] = xi1 * std::tanh(r);
  return ChartPoint::upper_half_real(n, x);
}

ChartPoint uv_dictionary(const ChartPoint& p) {
  require_chart(p, Chart::Bisector);
  double chs = std::cosh(p.x[0] / 2), chr = std::cosh(p.x[2] / 2);
  Eigen::VectorXd u(3);
  u << 1.0 / (chs * chs), 1.0 / chr, std::exp(-2.0 * p.x[1]);
  return ChartPoint::uvrho(p.par, u);
}

ChartPoint uv_dictionary_inverse(const ChartPoint& p, int m) {
  require_chart(p, Chart::UVRho);
  double s = 2.0 * std::acosh(1.0 / std::sqrt(p.x[0]));
  double rho = 2.0 * std::acosh(1.0 / p.x[1]);
  double tau = -0.5 * std::log(p.x[2]);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * m);
  v[0] = s;
  v[1] = tau;
  v[2] = rho;
  return ChartPoint::bisector(m, v);
}

ChartPoint inversion(const ChartPoint& p) {
  p.require_valid();
  switch (p.chart) {
    case Chart::UpperHalfReal: {
      Eigen::VectorXd x = p.x;
      x[p.par - 1] = -x[p.par - 1];
      return ChartPoint::upper_half_real(p.par, x);
    }
    case Chart::RealFermi: {
      Eigen::VectorXd x = p.x;
      x[0] = -x[0];
      return ChartPoint::real_fermi(p.par, x);
    }
    case Chart::Bisector: {
      Eigen::VectorXd x = p.x;
      x[0] = -x[0];
      x[1] = -x[1];
      return ChartPoint::bisector(p.par, x);
    }
    case Chart::Siegel: {
      const int m = p.par;
      using C = std::complex<double>;
      Eigen::VectorXd z = siegel_to_z(p);
      C zm(z[2 * m - 2], z[2 * m - 1]);
      Eigen::VectorXd zi(2 * m);
      for (int i = 0; i < m - 1; ++i) {
        C v = C(z[2 * i], z[2 * i + 1]) / zm;
        zi[2 * i] = v.real();
        zi[2 * i + 1] = v.imag();
      }
      C wm = 1.0 / zm;
      zi[2 * m - 2] = wm.real();
      zi[2 * m - 1] = wm.imag();
      return siegel_from_z(m, zi);
    }
    default:
      throw std::invalid_argument("inversion not defined in this chart");
  }
}

}  // namespace hs
