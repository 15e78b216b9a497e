#include "halfspace/tensor.hpp"

#include <cmath>

namespace hs {

namespace {

constexpr double kMetricStep = 1e-4;     // first derivatives of g
constexpr double kGammaStep = 2e-3;      // outer step for dGamma
constexpr double kFieldStep = 1e-4;      // scalar-field first derivatives
constexpr double kHessStep = 1e-3;       // outer step for field Hessians
constexpr double kMapStep = 1e-3;        // Jacobians of chart maps

double step_scale(double coord) { return std::max(1.0, std::abs(coord)); }

ChartPoint shifted(const ChartPoint& p, int k, double h) {
  ChartPoint q = p;
  q.x[k] += h;
  return q;
}

// 4th-order central difference (central stencil with one Richardson level).
template <typename F>
auto fd4(const F& f, const ChartPoint& p, int k, double h)
    -> decltype(f(p)) {
  auto fp1 = f(shifted(p, k, h));
  auto fm1 = f(shifted(p, k, -h));
  auto fp2 = f(shifted(p, k, 2 * h));
  auto fm2 = f(shifted(p, k, -2 * h));
  return (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
}

Eigen::MatrixXd metric_inverse(const MetricModel& model, const ChartPoint& p,
                               Eigen::MatrixXd* g_out = nullptr) {
  Eigen::MatrixXd g = model.evaluate(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (lo <= 0 || hi / lo > 1e12)
    throw std::runtime_error("metric inverse ill-conditioned at this point");
  if (g_out) *g_out = g;
  return g.inverse();
}

}  // namespace

std::vector<Eigen::MatrixXd> metric_derivatives(const MetricModel& model,
                                                const ChartPoint& p) {
  if (model.d_metric) return model.d_metric(p);
  const int d = model.dim;
  std::vector<Eigen::MatrixXd> out(d);
  for (int k = 0; k < d; ++k) {
    double h = kMetricStep * step_scale(p.x[k]);
    out[k] = fd4(model.evaluate, p, k, h);
  }
  return out;
}

std::vector<Eigen::MatrixXd> christoffel(const MetricModel& model,
                                         const ChartPoint& p) {
  const int d = model.dim;
  Eigen::MatrixXd ginv = metric_inverse(model, p);
  std::vector<Eigen::MatrixXd> dg = metric_derivatives(model, p);
  std::vector<Eigen::MatrixXd> gamma(d, Eigen::MatrixXd::Zero(d, d));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double v = 0;
        for (int l = 0; l < d; ++l)
          v += ginv(k, l) * (dg[i](l, j) + dg[j](i, l) - dg[l](i, j));
        gamma[k](i, j) = 0.5 * v;
        gamma[k](j, i) = 0.5 * v;
      }
  return gamma;
}

CurvatureAtPoint curvature(const MetricModel& model, const ChartPoint& p) {
  const int d = model.dim;
  CurvatureAtPoint out;
  out.dim = d;
  out.christoffel = christoffel(model, p);
  Eigen::MatrixXd g = model.evaluate(p);

  // dGamma[i][k](j,l) ~ d_i Gamma^k_jl, outer 4th-order differences of
  // the (analytic- or FD-differentiated) Christoffel symbols.
  std::vector<std::vector<Eigen::MatrixXd>> dgamma(d);
  for (int i = 0; i < d; ++i) {
    double h = kGammaStep * step_scale(p.x[i]);
    auto eval = [&](const ChartPoint& q) { return christoffel(model, q); };
    auto gp1 = eval(shifted(p, i, h)), gm1 = eval(shifted(p, i, -h));
    auto gp2 = eval(shifted(p, i, 2 * h)), gm2 = eval(shifted(p, i, -2 * h));
    dgamma[i].resize(d);
    for (int k = 0; k < d; ++k)
      dgamma[i][k] =
          (8.0 * (gp1[k] - gm1[k]) - (gp2[k] - gm2[k])) / (12.0 * h);
  }

  const auto& G = out.christoffel;
  std::vector<double> rup(static_cast<size_t>(d) * d * d * d, 0.0);
  auto idx = [d](int i, int j, int k, int l) {
    return ((static_cast<size_t>(i) * d + j) * d + k) * d + l;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double v = dgamma[i][l](j, k) - dgamma[j][l](i, k);
          for (int q = 0; q < d; ++q)
            v += G[l](i, q) * G[q](j, k) - G[l](j, q) * G[q](i, k);
          rup[idx(i, j, k, l)] = v;  // R^l_ijk
        }
  out.riemann.assign(rup.size(), 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double v = 0;
          for (int q = 0; q < d; ++q) v += g(l, q) * rup[idx(i, j, k, q)];
          out.riemann[idx(i, j, k, l)] = v;  // fully lowered
        }
  out.ricci = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      double v = 0;
      for (int i = 0; i < d; ++i) v += rup[idx(i, j, k, i)];
      out.ricci(j, k) = v;  // Ric(Y,Z) = tr(X -> R(X,Y)Z)
    }
  Eigen::MatrixXd ginv = g.inverse();
  out.scalar = (ginv * out.ricci).trace();
  return out;
}

double sectional_curvature(const MetricModel& model, const ChartPoint& p,
                           const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
  Eigen::MatrixXd g = model.evaluate(p);
  double xx = X.dot(g * X), yy = Y.dot(g * Y), xy = X.dot(g * Y);
  double denom = xx * yy - xy * xy;
  if (denom < 1e-12) throw std::invalid_argument("degenerate plane");
  CurvatureAtPoint c = curvature(model, p);
  const int d = model.dim;
  double num = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          num += c.r(i, j, k, l) * X[i] * Y[j] * Y[k] * X[l];
  return num / denom;
}

Eigen::VectorXd differential(const ScalarField& f, const ChartPoint& p) {
  const int d = p.dim();
  Eigen::VectorXd df(d);
  for (int k = 0; k < d; ++k)
    df[k] = fd4(f, p, k, kFieldStep * step_scale(p.x[k]));
  return df;
}

double cometric_inner(const MetricModel& model, const ChartPoint& p,
                      const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.dot(metric_inverse(model, p) * b);
}

double laplace_beltrami(const MetricModel& model, const ScalarField& f,
                        const ChartPoint& p) {
  const int d = model.dim;
  Eigen::MatrixXd ginv = metric_inverse(model, p);
  std::vector<Eigen::MatrixXd> gamma = christoffel(model, p);
  Eigen::VectorXd df = differential(f, p);
  // Hessian: outer differences of the (4th-order) gradient.
  Eigen::MatrixXd hess(d, d);
  auto grad = [&](const ChartPoint& q) { return differential(f, q); };
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd col = fd4(grad, p, k, kHessStep * step_scale(p.x[k]));
    hess.col(k) = col;
  }
  hess = 0.5 * (hess + hess.transpose().eval());
  double acc = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double v = hess(i, j);
      for (int k = 0; k < d; ++k) v -= gamma[k](i, j) * df[k];
      acc += ginv(i, j) * v;
    }
  return -acc;
}

FoliationData second_fundamental_form(const MetricModel& model,
                                      const ChartPoint& p) {
  if (model.chart != Chart::Bisector && model.chart != Chart::RealFermi)
    throw std::invalid_argument("s-coordinate splitting unavailable in this chart");
  p.require_valid();
  const int d = model.dim;
  auto slice = [&](const ChartPoint& q) -> Eigen::MatrixXd {
    return model.evaluate(q).bottomRightCorner(d - 1, d - 1);
  };
  FoliationData out;
  out.slice_metric = slice(p);
  out.second_fundamental = -0.5 * fd4(slice, p, 0, kMetricStep);
  out.shape_operator = out.slice_metric.inverse() * out.second_fundamental;
  out.mean_curvature = out.shape_operator.trace();
  return out;
}

double mean_curvature(const MetricModel& model, const ChartPoint& p) {
  return second_fundamental_form(model, p).mean_curvature;
}

PullbackReport pullback_check(const ChartMap& map, const MetricModel& source,
                              const MetricModel& target,
                              const std::vector<ChartPoint>& points) {
  PullbackReport rep;
  const int ds = source.dim, dt = target.dim;
  for (const auto& p : points) {
    try {
      Eigen::MatrixXd gs = source.evaluate(p);
      Eigen::MatrixXd J(dt, ds);
      for (int k = 0; k < ds; ++k) {
        auto comp = [&](const ChartPoint& q) -> Eigen::VectorXd {
          return map(q).x;
        };
        J.col(k) = fd4(comp, p, k, kMapStep * step_scale(p.x[k]));
      }
      Eigen::MatrixXd gt = target.evaluate(map(p));
      double dev = (J.transpose() * gt * J - gs).cwiseAbs().maxCoeff();
      rep.max_deviation = std::max(rep.max_deviation, dev);
      rep.used += 1;
    } catch (const std::domain_error&) {
      rep.skipped += 1;
    }
  }
  return rep;
}

}  // namespace hs
