#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halfspace/exact.hpp"

using hs::ExactWeight;
using hs::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(7, 2).value() == doctest::Approx(3.5));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(5).str() == "5");
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("square roots canonicalize") {
  // Perfect squares collapse to rationals.
  CHECK(ExactWeight::sqrt_of(Rational(4)) == ExactWeight::rational(2));
  CHECK(ExactWeight::sqrt_of(Rational(9, 4)) == ExactWeight::rational(Rational(3, 2)));
  CHECK(ExactWeight::sqrt_of(Rational(0)) == ExactWeight::rational(0));

  // Square factors are extracted: sqrt(8) = 2 sqrt(2), sqrt(12) = 2 sqrt(3).
  ExactWeight r8 = ExactWeight::sqrt_of(Rational(8));
  CHECK(r8 == ExactWeight::sqrt_of(Rational(2)).scaled(2));
  CHECK(r8.value() == doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));

  // sqrt(1/2) = sqrt(2)/2.
  ExactWeight half = ExactWeight::sqrt_of(Rational(1, 2));
  CHECK(half == ExactWeight::sqrt_of(Rational(2)).scaled(Rational(1, 2)));

  CHECK_THROWS_AS(ExactWeight::sqrt_of(Rational(-1)), std::domain_error);
}

TEST_CASE("weight addition is structural") {
  ExactWeight a = ExactWeight::rational(Rational(3, 2)) +
                  ExactWeight::sqrt_of(Rational(13)).scaled(Rational(1, 2));
  CHECK(a.value() == doctest::Approx(1.5 + std::sqrt(13.0) / 2).epsilon(1e-14));
  CHECK(a.str() == "3/2 + 1/2*sqrt(13)");

  // sqrt(2) + sqrt(8) = 3 sqrt(2).
  ExactWeight s = ExactWeight::sqrt_of(Rational(2)) + ExactWeight::sqrt_of(Rational(8));
  CHECK(s == ExactWeight::sqrt_of(Rational(2)).scaled(3));

  // Radical coefficients cancel structurally.
  ExactWeight z = ExactWeight::sqrt_of(Rational(3)) - ExactWeight::sqrt_of(Rational(3));
  CHECK(z.is_zero());
  CHECK(z == ExactWeight());

  ExactWeight b = a - ExactWeight::rational(Rational(3, 2));
  CHECK(b.is_rational() == false);
  CHECK((a - a).is_zero());
  CHECK((-a).value() == doctest::Approx(-a.value()));
}

TEST_CASE("structural order is usable as container key") {
  ExactWeight a = ExactWeight::rational(1);
  ExactWeight b = ExactWeight::sqrt_of(Rational(2));
  ExactWeight c = ExactWeight::sqrt_of(Rational(3));
  CHECK((a < b || b < a));
  CHECK((b < c || c < b));
  CHECK_FALSE(a < a);
}
