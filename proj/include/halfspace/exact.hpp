#pragma once
// Exact arithmetic for weights of the form q0 + sum_d c_d * sqrt(d):
// rationals plus rational multiples of integer square roots, kept in a
// canonical form so that equality of weights is structural, not numeric.
// Products of distinct radicals are intentionally unsupported; the
// enumeration that consumes these values is purely additive.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace hs {

struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(num, den) == 1

  Rational() = default;
  Rational(long long n);  // NOLINT: implicit on purpose
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num, den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

// Canonical form: the radicand keys are square-free integers >= 2
// (square factors are folded into the coefficient), zero coefficients
// are dropped.  Two weights are equal iff their representations are.
class ExactWeight {
 public:
  ExactWeight() = default;
  static ExactWeight rational(const Rational& q);
  // sqrt(r) for a nonnegative rational r, canonicalized.
  static ExactWeight sqrt_of(const Rational& r);

  ExactWeight operator+(const ExactWeight& o) const;
  ExactWeight operator-(const ExactWeight& o) const;
  ExactWeight operator-() const;
  ExactWeight scaled(const Rational& c) const;

  bool operator==(const ExactWeight& o) const {
    return q_ == o.q_ && rad_ == o.rad_;
  }
  bool operator!=(const ExactWeight& o) const { return !(*this == o); }
  // Structural (container) order, *not* the numeric order.
  bool operator<(const ExactWeight& o) const;

  bool is_zero() const { return q_ == Rational(0) && rad_.empty(); }
  bool is_rational() const { return rad_.empty(); }
  const Rational& rational_part() const { return q_; }

  double value() const;
  std::string str() const;

 private:
  Rational q_;
  std::map<long long, Rational> rad_;  // square-free radicand -> coefficient
  void add_radical(long long radicand, const Rational& coeff);
  friend class ExactWeightBuilder;
};

}  // namespace hs
