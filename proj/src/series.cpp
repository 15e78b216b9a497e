#include "halfspace/series.hpp"

#include <algorithm>
#include <cmath>

namespace hs {

namespace {
bool term_order(const PolyTerm& a, const PolyTerm& b) {
  double av = a.tau.value(), bv = b.tau.value();
  if (std::abs(av - bv) > 1e-14) return av < bv;
  if (!(a.tau == b.tau)) return a.tau < b.tau;
  return a.sigma < b.sigma;
}
}  // namespace

void PolySeries::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::vector<PolyTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().sigma == t.sigma &&
        merged.back().tau == t.tau) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  terms_.clear();
  for (const auto& t : merged)
    if (t.coeff != 0.0) terms_.push_back(t);
}

PolySeries PolySeries::term(double coeff, int sigma, const ExactWeight& tau) {
  PolySeries s;
  s.add_term(coeff, sigma, tau);
  return s;
}

void PolySeries::add_term(double coeff, int sigma, const ExactWeight& tau) {
  if (sigma < 0) throw std::invalid_argument("negative polynomial power");
  terms_.push_back({sigma, tau, coeff});
  normalize();
}

PolySeries PolySeries::operator+(const PolySeries& o) const {
  PolySeries r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

PolySeries PolySeries::operator-(const PolySeries& o) const {
  return *this + o.scaled(-1.0);
}

PolySeries PolySeries::scaled(double c) const {
  PolySeries r;
  if (c == 0.0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

PolySeries PolySeries::operator*(const PolySeries& o) const {
  PolySeries r;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      r.terms_.push_back({a.sigma + b.sigma, a.tau + b.tau, a.coeff * b.coeff});
  r.normalize();
  return r;
}

PolySeries PolySeries::component(const ExactWeight& alpha) const {
  PolySeries r;
  for (const auto& t : terms_)
    if (t.tau == alpha) r.terms_.push_back(t);
  return r;
}

std::optional<ExactWeight> PolySeries::floor_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().tau;  // sorted ascending by tau
}

double PolySeries::evaluate(double s) const {
  return evaluate_shifted(s, 0.0);
}

double PolySeries::evaluate_shifted(double s, double omega) const {
  double v = 0;
  for (const auto& t : terms_)
    v += t.coeff * std::pow(s, t.sigma) * std::exp(-(t.tau.value() - omega) * s);
  return v;
}

}  // namespace hs
