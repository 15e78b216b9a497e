#include "halfspace/exact.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace hs {

namespace {

long long checked_ll(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n) : num(n), den(1) {}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  // reduce in 128 bits before narrowing
  auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
  __int128 a = abs128(n), b = d;
  while (b != 0) { __int128 t = a % b; a = b; b = t; }
  if (a == 0) a = 1;
  return Rational(checked_ll(n / a), checked_ll(d / a));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  long long g1 = std::gcd(num < 0 ? -num : num, o.den);
  long long g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
  __int128 n = static_cast<__int128>(num / g1) * (o.num / g2);
  __int128 d = static_cast<__int128>(den / g2) * (o.den / g1);
  return Rational(checked_ll(n), checked_ll(d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::invalid_argument("rational division by zero");
  return *this * Rational(o.den, o.num);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

ExactWeight ExactWeight::rational(const Rational& q) {
  ExactWeight w;
  w.q_ = q;
  return w;
}

void ExactWeight::add_radical(long long radicand, const Rational& coeff) {
  if (coeff == Rational(0)) return;
  if (radicand < 2) throw std::invalid_argument("radicand must be >= 2 after reduction");
  auto it = rad_.find(radicand);
  if (it == rad_.end()) {
    rad_.emplace(radicand, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second == Rational(0)) rad_.erase(it);
  }
}

ExactWeight ExactWeight::sqrt_of(const Rational& r) {
  if (r.num < 0) throw std::domain_error("sqrt of negative rational");
  if (r.num == 0) return ExactWeight();
  // sqrt(num/den) = sqrt(num*den)/den
  __int128 rad128 = static_cast<__int128>(r.num) * r.den;
  long long radicand = checked_ll(rad128);
  // pull out the largest square factor
  long long outer = 1;
  for (long long f = 2; f * f <= radicand; ++f) {
    while (radicand % (f * f) == 0) {
      radicand /= f * f;
      outer *= f;
    }
  }
  ExactWeight w;
  if (radicand == 1) {
    w.q_ = Rational(outer, r.den);
  } else {
    w.add_radical(radicand, Rational(outer, r.den));
  }
  return w;
}

ExactWeight ExactWeight::operator+(const ExactWeight& o) const {
  ExactWeight w = *this;
  w.q_ = w.q_ + o.q_;
  for (const auto& [d, c] : o.rad_) w.add_radical(d, c);
  return w;
}

ExactWeight ExactWeight::operator-() const {
  ExactWeight w;
  w.q_ = -q_;
  for (const auto& [d, c] : rad_) w.rad_.emplace(d, -c);
  return w;
}

ExactWeight ExactWeight::operator-(const ExactWeight& o) const { return *this + (-o); }

ExactWeight ExactWeight::scaled(const Rational& c) const {
  ExactWeight w;
  if (c == Rational(0)) return w;
  w.q_ = q_ * c;
  for (const auto& [d, cc] : rad_) w.rad_.emplace(d, cc * c);
  return w;
}

bool ExactWeight::operator<(const ExactWeight& o) const {
  if (q_.num != o.q_.num) return q_.num < o.q_.num;
  if (q_.den != o.q_.den) return q_.den < o.q_.den;
  auto it = rad_.begin();
  auto jt = o.rad_.begin();
  for (; it != rad_.end() && jt != o.rad_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (!(it->second == jt->second)) return it->second < jt->second;
  }
  return jt != o.rad_.end();
}

double ExactWeight::value() const {
  double v = q_.value();
  for (const auto& [d, c] : rad_) v += c.value() * std::sqrt(static_cast<double>(d));
  return v;
}

std::string ExactWeight::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (!(q_ == Rational(0))) {
    os << q_.str();
    first = false;
  }
  for (const auto& [d, c] : rad_) {
    Rational cc = c;
    if (!first) {
      os << (cc < Rational(0) ? " - " : " + ");
      if (cc < Rational(0)) cc = -cc;
    }
    if (!(cc == Rational(1))) os << cc.str() << "*";
    os << "sqrt(" << d << ")";
    first = false;
  }
  return os.str();
}

}  // namespace hs
