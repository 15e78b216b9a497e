#pragma once
// Finite sums  sum_{sigma,tau} a_{sigma,tau} s^sigma e^{-tau s}  with
// exact exponential weights.  sigma is restricted to nonnegative
// integers (every power produced by the resonance mechanism is one).

#include <optional>
#include <vector>

#include "halfspace/exact.hpp"

namespace hs {

struct PolyTerm {
  int sigma = 0;
  ExactWeight tau;
  double coeff = 0;
};

class PolySeries {
 public:
  PolySeries() = default;
  static PolySeries term(double coeff, int sigma, const ExactWeight& tau);

  void add_term(double coeff, int sigma, const ExactWeight& tau);
  PolySeries operator+(const PolySeries& o) const;
  PolySeries operator-(const PolySeries& o) const;
  PolySeries scaled(double c) const;
  PolySeries operator*(const PolySeries& o) const;  // termwise product

  // Terms with tau structurally equal to alpha.
  PolySeries component(const ExactWeight& alpha) const;
  // Minimal tau over the terms; nullopt for the zero series.
  std::optional<ExactWeight> floor_weight() const;

  bool empty() const { return terms_.empty(); }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  double evaluate(double s) const;
  // Pointwise value of e^{omega s} * (this), computed termwise to avoid
  // under/overflow when the floor is near omega.
  double evaluate_shifted(double s, double omega) const;

 private:
  // Sorted by (tau numeric, structural tie-break, sigma); coefficients
  // exactly zero are dropped.
  std::vector<PolyTerm> terms_;
  void normalize();
};

}  // namespace hs
