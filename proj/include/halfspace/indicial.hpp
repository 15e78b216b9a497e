#pragma once
// Critical weights of the scalar radial operator -d^2 - H d + lambda,
// aggregation over eigenmodes, the additive monoid generated by the
// upper critical weights, and the exponent ladder it induces.

#include <vector>

#include "halfspace/exact.hpp"

namespace hs {

struct Mode {
  Rational lambda;
  int multiplicity = 1;
  std::string label;
};

struct ModeSpectrum {
  std::vector<Mode> modes;
  Rational calH;
};

struct CriticalPair {
  ExactWeight minus;
  ExactWeight plus;
};

// mu_pm = H/2 +- sqrt(H^2/4 + lambda); throws std::domain_error when the
// discriminant is negative (complex indicial roots, out of scope).
CriticalPair critical_pair(const Rational& lambda, const Rational& calH);

struct CriticalWeightSet {
  std::vector<CriticalPair> per_mode;
  ExactWeight mu_plus;       // min over modes of mu_+^{(i)}
  ExactWeight mu_minus;      // max over modes of mu_-^{(i)}
  ExactWeight mu_plus_max;
  ExactWeight mu_minus_min;
};

CriticalWeightSet critical_weights(const ModeSpectrum& spectrum);

// The concrete complex-case eigenvalue list (H = m):
// lambda in {0, 2, (2m+5)/4, m+1}, whose upper critical weights are
// m, (m+sqrt(m^2+8))/2, (m+sqrt(m^2+2m+5))/2, m+1.
ModeSpectrum einstein_complex_spectrum(int m);
std::vector<ExactWeight> einstein_complex_weights(int m);  // sorted ascending

// All finite sums of the generators (including 0) with numeric value
// <= bound, sorted ascending, structural duplicates merged.
std::vector<ExactWeight> monoid_enumerate(const std::vector<ExactWeight>& generators,
                                          double bound);

// a_0 = 0, mu_plus + a_{k+1} = min { l in N_L : l > mu_plus + a_k }.
// Requires mu_plus itself to lie in the monoid.
std::vector<ExactWeight> ladder(const ExactWeight& mu_plus,
                                const std::vector<ExactWeight>& generators,
                                int K);

struct OpenInterval {
  ExactWeight lo;
  ExactWeight hi;
};

// ]H/2 - sqrt(H^2/4+lambda), H/2 + sqrt(H^2/4+lambda)[; lambda >= 0.
OpenInterval dirichlet_interval(const Rational& lambda, const Rational& calH);

}  // namespace hs
