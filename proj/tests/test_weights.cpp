#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "halfspace/models.hpp"
#include "halfspace/weights.hpp"

using namespace hs;

namespace {
Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<long>(v.size()));
  int i = 0;
  for (double t : v) x[i++] = t;
  return x;
}

WeightSpec real_spec(int n, double d1, double d2) {
  WeightSpec s;
  s.kind = WeightSpec::Kind::Real;
  s.par = n;
  s.delta1 = d1;
  s.delta2 = d2;
  return s;
}

WeightSpec cx_spec(int m, double d1, double d2) {
  WeightSpec s;
  s.kind = WeightSpec::Kind::Complex;
  s.par = m;
  s.delta1 = d1;
  s.delta2 = d2;
  return s;
}
}  // namespace

TEST_CASE("weight values") {
  // delta = 0 gives the constant 1.
  ChartPoint f = ChartPoint::real_fermi(4, vec({0.7, 2.0, 0.3, -0.8}));
  CHECK(weight_value(real_spec(4, 0, 0), f) == doctest::Approx(1.0));
  // At the reference point (s = 0, xi = xi0) both factors are cosh 0 = 1.
  ChartPoint o = ChartPoint::real_fermi(4, vec({0.0, 1.0, 0.0, 0.0}));
  CHECK(weight_value(real_spec(4, 1, 2), o) == doctest::Approx(1.0));
  // Inversion invariance: w is even in s (and tau).
  CHECK(weight_value(real_spec(4, 1.5, 1.0), inversion(f)) ==
        doctest::Approx(weight_value(real_spec(4, 1.5, 1.0), f)).epsilon(1e-13));
  ChartPoint b = ChartPoint::bisector(2, vec({1.3, -0.6, 0.8, 2.0}));
  CHECK(weight_value(cx_spec(2, 1, 1), inversion(b)) ==
        doctest::Approx(weight_value(cx_spec(2, 1, 1), b)).epsilon(1e-13));
}

TEST_CASE("admissibility guards name the violated bound") {
  CHECK_NOTHROW(require_admissible(real_spec(4, 1, 1)));
  CHECK_THROWS_AS(require_admissible(real_spec(4, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(require_admissible(real_spec(4, 3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(require_admissible(real_spec(4, 1, 2.5)), std::invalid_argument);
  CHECK_NOTHROW(require_admissible(cx_spec(2, 1, 1.25)));
  CHECK_THROWS_AS(require_admissible(cx_spec(2, 1, 1.4)), std::invalid_argument);
  CHECK_NOTHROW(require_admissible(cx_spec(3, 1, 1.4)));
  CHECK_THROWS_AS(require_admissible(cx_spec(3, 3, 1)), std::invalid_argument);
}

TEST_CASE("closed functional golden values") {
  // Real, delta2 = 0 at s = 0: the value is delta1.
  ChartPoint o = ChartPoint::real_fermi(4, vec({0.0, 1.0, 0.0, 0.0}));
  CHECK(weight_functional_closed(real_spec(4, 1, 0), o) == doctest::Approx(1.0));
  // Complex at p = varpi = 0: delta1 / 2 (plus the tau-term at tau = 0:
  // u3 = |dtau|^2 * d2/4 * (1 + d2 - d2) = d2/4 at the origin).
  ChartPoint b0 = ChartPoint::bisector(2, vec({0.0, 0.0, 1e-8, 1.0}));
  CHECK(weight_functional_closed(cx_spec(2, 1, 0), b0) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("closed functional matches the numeric tensor engine") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  // Real kind.
  for (int n : {3, 4, 5}) {
    MetricModel fermi = real_fermi_model(n);
    WeightSpec spec = real_spec(n, 0.8, 1.1);
    for (int t = 0; t < 3; ++t) {
      Eigen::VectorXd x(n);
      x[0] = 1.5 * u(rng);
      x[1] = 1.0 + 0.5 * u(rng);
      for (int i = 2; i < n; ++i) x[i] = u(rng);
      ChartPoint p = ChartPoint::real_fermi(n, x);
      CHECK(weight_functional_closed(spec, p) ==
            doctest::Approx(weight_functional_numeric(spec, p, fermi)).epsilon(1e-6));
    }
  }
  // Complex kind, including the tau-dependent third term.
  for (int m : {2, 3}) {
    MetricModel bis = bisector_model(m);
    WeightSpec spec = cx_spec(m, 0.9, 1.2);
    for (int t = 0; t < 3; ++t) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * m);
      x[0] = 1.5 * u(rng);
      x[1] = u(rng);
      x[2] = 1.0 + 0.5 * u(rng);
      for (int i = 3; i < 2 * m; ++i) x[i] = 0.8 + 0.3 * u(rng);
      ChartPoint p = ChartPoint::bisector(m, x);
      CHECK(weight_functional_closed(spec, p) ==
            doctest::Approx(weight_functional_numeric(spec, p, bis)).epsilon(1e-6));
    }
  }
}

TEST_CASE("complex tau dependence and its infimum") {
  WeightSpec spec = cx_spec(2, 1.0, 1.0);
  double s = 1.2, rho = 0.9;
  double a = std::pow(std::tanh(s / 2), 2), b = std::pow(std::tanh(rho / 2), 2);
  // As tau -> infinity the closed value approaches the grid value.
  ChartPoint far = ChartPoint::bisector(2, vec({s, 40.0, rho, 1.0}));
  CHECK(weight_functional_closed(spec, far) ==
        doctest::Approx(weight_functional_grid(spec, a, b)).epsilon(1e-10));
  // At finite tau the closed value is strictly larger (the u3 term
  // decreases monotonically to its infimum).
  ChartPoint near = ChartPoint::bisector(2, vec({s, 0.3, rho, 1.0}));
  CHECK(weight_functional_closed(spec, near) > weight_functional_grid(spec, a, b));
  // The real functional does not depend on the slice point beyond rho.
  WeightSpec rs = real_spec(4, 1.0, 1.0);
  ChartPoint p1 = ChartPoint::real_fermi(4, vec({0.5, 1.0, 0.6, 0.0}));
  ChartPoint p2 = ChartPoint::real_fermi(4, vec({0.5, 1.0, 0.0, 0.6}));
  CHECK(weight_functional_closed(rs, p1) ==
        doctest::Approx(weight_functional_closed(rs, p2)).epsilon(1e-13));
}

TEST_CASE("large-s limit is delta1 (H - delta1)") {
  ChartPoint rf = ChartPoint::real_fermi(4, vec({20.0, 1.2, 0.5, 0.0}));
  CHECK(std::abs(weight_functional_closed(real_spec(4, 1, 1), rf) - 1.0 * (3 - 1)) < 1e-4);
  ChartPoint bf = ChartPoint::bisector(2, vec({20.0, 0.4, 1.0, 1.0}));
  CHECK(std::abs(weight_functional_closed(cx_spec(2, 1.5, 1.0), bf) - 1.5 * (2 - 1.5)) < 1e-4);
}

TEST_CASE("positivity certificates on admissible grids") {
  // Interior 5x5 grids of (delta1, delta2) for each family.
  for (int n : {3, 4, 5}) {
    for (int i = 1; i <= 5; ++i)
      for (int j = 0; j < 5; ++j) {
        WeightSpec spec = real_spec(n, (n - 1.0) * i / 6.0, (n - 2.0) * j / 5.0);
        ScanReport r = certify_positivity(spec, 2e-2);
        CHECK(r.pass);
        CHECK(r.infimum > 0);
      }
  }
  for (int m : {2, 3}) {
    double top2 = m == 2 ? 1.25 : m - 0.5;
    for (int i = 1; i <= 5; ++i)
      for (int j = 0; j < 5; ++j) {
        WeightSpec spec = cx_spec(m, m * i / 6.0, top2 * j / 5.0);
        ScanReport r = certify_positivity(spec, 2e-2);
        CHECK(r.pass);
      }
  }
  // Example values: real n=4, d1=d2=1 has infimum >= 1.
  ScanReport r = certify_positivity(real_spec(4, 1, 1), 5e-3);
  CHECK(r.infimum >= 1.0 - 1e-6);
}

TEST_CASE("positivity fails outside the admissible range") {
  CHECK_THROWS_AS(certify_positivity(real_spec(4, 3.5, 0), 1e-2), std::invalid_argument);
}

TEST_CASE("shifted interval") {
  WeightSpec spec = real_spec(4, 1.0, 0.0);
  CHECK_THROWS_AS(shifted_interval(spec, -1.0), std::invalid_argument);
  ShiftReport sr = shifted_interval(spec, 4.0);
  // H = 3: interval ]3/2 - 5/2, 3/2 + 5/2[ = ]-1, 4[.
  CHECK(sr.lo == doctest::Approx(-1.0));
  CHECK(sr.hi == doctest::Approx(4.0));
  CHECK(sr.delta1_in_interval);
  CHECK(sr.pass);
  WeightSpec out = spec;
  out.delta1 = 2.9;  // admissible for lambda = 0 but near the top
  ShiftReport sr0 = shifted_interval(out, 0.0);
  CHECK(sr0.hi == doctest::Approx(3.0));
  CHECK(sr0.delta1_in_interval);
}
