#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halfspace/indicial.hpp"

using namespace hs;

namespace {
ExactWeight W(long long q) { return ExactWeight::rational(Rational(q)); }
}  // namespace

TEST_CASE("critical pairs") {
  // lambda = 0, H = 3: (0, 3).
  CriticalPair p0 = critical_pair(Rational(0), Rational(3));
  CHECK(p0.minus == W(0));
  CHECK(p0.plus == W(3));
  // lambda = 4, H = 3: 3/2 +- 5/2 = (-1, 4), exactly rational.
  CriticalPair p4 = critical_pair(Rational(4), Rational(3));
  CHECK(p4.minus == W(-1));
  CHECK(p4.plus == W(4));
  // lambda = 2, H = 2: 1 +- sqrt(3).
  CriticalPair p2 = critical_pair(Rational(2), Rational(2));
  CHECK(p2.plus == W(1) + ExactWeight::sqrt_of(Rational(3)));
  CHECK(p2.minus == W(1) - ExactWeight::sqrt_of(Rational(3)));
  // Vieta: sum = H, product = -lambda.
  CHECK((p2.plus + p2.minus) == W(2));
  CHECK(p2.plus.value() * p2.minus.value() == doctest::Approx(-2.0).epsilon(1e-14));
  // Negative discriminant is out of scope.
  CHECK_THROWS_AS(critical_pair(Rational(-9), Rational(2)), std::domain_error);
}

TEST_CASE("einstein-mode spectrum and weights for the complex model") {
  for (int m = 2; m <= 6; ++m) {
    ModeSpectrum sp = einstein_complex_spectrum(m);
    CHECK(sp.calH == Rational(m));
    REQUIRE(sp.modes.size() == 4);
    CHECK(sp.modes[0].lambda == Rational(0));
    CHECK(sp.modes[1].lambda == Rational(2));
    CHECK(sp.modes[2].lambda == Rational(2 * m + 5, 4));
    CHECK(sp.modes[3].lambda == Rational(m + 1));

    std::vector<ExactWeight> w = einstein_complex_weights(m);
    REQUIRE(w.size() == 4);
    // Closed radicals: m, (m + sqrt(m^2+8))/2, (m + sqrt(m^2+2m+5))/2, m+1.
    ExactWeight half = ExactWeight::rational(Rational(1, 2));
    ExactWeight w2 = (W(m) + ExactWeight::sqrt_of(Rational(m * m + 8))).scaled(Rational(1, 2));
    ExactWeight w3 =
        (W(m) + ExactWeight::sqrt_of(Rational(m * m + 2 * m + 5))).scaled(Rational(1, 2));
    CHECK(w[0] == W(m));
    CHECK(w[1] == w2);
    CHECK(w[2] == w3);
    CHECK(w[3] == W(m + 1));
    CHECK(w[0].value() < w[1].value());
    CHECK(w[1].value() < w[2].value());
    CHECK(w[2].value() < w[3].value());
    (void)half;
  }

  CriticalWeightSet cs = critical_weights(einstein_complex_spectrum(2));
  CHECK(cs.mu_plus == W(2));       // min over modes
  CHECK(cs.mu_plus_max == W(3));
  CHECK(cs.mu_minus == W(0));      // max of the lower weights
}

TEST_CASE("monoid enumeration") {
  // Integer generators {1, 3} up to 5: {0, 1, 2, 3, 4, 5}.
  std::vector<ExactWeight> g = {W(1), W(3)};
  auto mono = monoid_enumerate(g, 5.0);
  REQUIRE(mono.size() == 6);
  for (int i = 0; i <= 5; ++i) CHECK(mono[i] == W(i));

  // Radical generators dedupe structurally: sqrt(2) + sqrt(2) = 2 sqrt(2)
  // appears once.
  std::vector<ExactWeight> g2 = {ExactWeight::sqrt_of(Rational(2))};
  auto mono2 = monoid_enumerate(g2, 3.0);
  REQUIRE(mono2.size() == 3);  // 0, sqrt2, 2 sqrt2
  CHECK(mono2[2] == ExactWeight::sqrt_of(Rational(2)).scaled(2));

  // Mixed generators stay sorted numerically.
  std::vector<ExactWeight> g3 = {W(1), ExactWeight::sqrt_of(Rational(2))};
  auto mono3 = monoid_enumerate(g3, 3.0);
  for (size_t i = 1; i < mono3.size(); ++i)
    CHECK(mono3[i - 1].value() < mono3[i].value() + 1e-12);
}

TEST_CASE("ladder for the m = 2 complex spectrum") {
  // Generators: 1/2 together with the upper critical weights; the ladder
  // over mu_+ = 2 begins 0, 1/2, sqrt3 - 1, (sqrt13 - 2)/2, 1.
  std::vector<ExactWeight> gens = einstein_complex_weights(2);
  gens.push_back(ExactWeight::rational(Rational(1, 2)));
  ExactWeight mu = W(2);
  auto a = ladder(mu, gens, 4);
  REQUIRE(a.size() == 5);
  CHECK(a[0] == W(0));
  CHECK(a[1] == ExactWeight::rational(Rational(1, 2)));
  CHECK(a[2] == ExactWeight::sqrt_of(Rational(3)) - W(1));
  CHECK(a[3] == (ExactWeight::sqrt_of(Rational(13)) - W(2)).scaled(Rational(1, 2)));
  CHECK(a[4] == W(1));
}

TEST_CASE("integer ladder") {
  auto a = ladder(W(3), {W(1), W(3)}, 5);
  REQUIRE(a.size() == 6);
  for (int k = 0; k <= 5; ++k) CHECK(a[k] == W(k));
}

TEST_CASE("dirichlet interval") {
  OpenInterval iv = dirichlet_interval(Rational(0), Rational(3));
  CHECK(iv.lo == W(0));
  CHECK(iv.hi == W(3));
  OpenInterval iv2 = dirichlet_interval(Rational(2), Rational(2));
  CHECK(iv2.hi == W(1) + ExactWeight::sqrt_of(Rational(3)));
}
