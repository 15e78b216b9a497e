#include "halfspace/indicial.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hs {

CriticalPair critical_pair(const Rational& lambda, const Rational& calH) {
  Rational disc = calH * calH * Rational(1, 4) + lambda;
  if (disc < Rational(0))
    throw std::domain_error("negative indicial discriminant: complex roots");
  ExactWeight half = ExactWeight::rational(calH * Rational(1, 2));
  ExactWeight root = ExactWeight::sqrt_of(disc);
  return {half - root, half + root};
}

CriticalWeightSet critical_weights(const ModeSpectrum& spectrum) {
  if (spectrum.modes.empty()) throw std::invalid_argument("empty mode spectrum");
  CriticalWeightSet out;
  for (const auto& mode : spectrum.modes)
    out.per_mode.push_back(critical_pair(mode.lambda, spectrum.calH));
  auto by_value = [](const ExactWeight& a, const ExactWeight& b) {
    return a.value() < b.value();
  };
  out.mu_plus = out.per_mode[0].plus;
  out.mu_minus = out.per_mode[0].minus;
  out.mu_plus_max = out.per_mode[0].plus;
  out.mu_minus_min = out.per_mode[0].minus;
  for (const auto& pr : out.per_mode) {
    if (by_value(pr.plus, out.mu_plus)) out.mu_plus = pr.plus;
    if (by_value(out.mu_plus_max, pr.plus)) out.mu_plus_max = pr.plus;
    if (by_value(out.mu_minus, pr.minus)) out.mu_minus = pr.minus;
    if (by_value(pr.minus, out.mu_minus_min)) out.mu_minus_min = pr.minus;
  }
  return out;
}

ModeSpectrum einstein_complex_spectrum(int m) {
  if (m < 2) throw std::invalid_argument("complex spectrum needs m >= 2");
  ModeSpectrum sp;
  sp.calH = Rational(m);
  sp.modes = {
      {Rational(0), 1, "scalar"},
      {Rational(2), 1, "contact"},
      {Rational(2 * m + 5, 4), 1, "mixed"},
      {Rational(m + 1), 1, "top"},
  };
  return sp;
}

std::vector<ExactWeight> einstein_complex_weights(int m) {
  auto cw = critical_weights(einstein_complex_spectrum(m));
  std::vector<ExactWeight> out;
  for (const auto& pr : cw.per_mode) out.push_back(pr.plus);
  std::sort(out.begin(), out.end(), [](const ExactWeight& a, const ExactWeight& b) {
    return a.value() < b.value();
  });
  return out;
}

std::vector<ExactWeight> monoid_enumerate(const std::vector<ExactWeight>& generators,
                                          double bound) {
  if (generators.empty()) throw std::invalid_argument("empty generator set");
  for (const auto& g : generators)
    if (g.value() <= 0) throw std::invalid_argument("generators must be positive");
  // Best-first expansion: pop the numerically smallest pending element,
  // emit it, push its successors; structural dedup avoids float ties.
  using Entry = std::pair<double, ExactWeight>;
  auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::set<ExactWeight> seen;
  ExactWeight zero;
  heap.emplace(0.0, zero);
  seen.insert(zero);
  std::vector<ExactWeight> out;
  while (!heap.empty()) {
    auto [v, w] = heap.top();
    heap.pop();
    if (v > bound + 1e-12) break;
    out.push_back(w);
    for (const auto& g : generators) {
      ExactWeight next = w + g;
      double nv = next.value();
      if (nv <= bound + 1e-12 && seen.insert(next).second) heap.emplace(nv, next);
    }
  }
  return out;
}

std::vector<ExactWeight> ladder(const ExactWeight& mu_plus,
                                const std::vector<ExactWeight>& generators,
                                int K) {
  double min_gen = generators.empty() ? 1.0 : generators[0].value();
  for (const auto& g : generators) min_gen = std::min(min_gen, g.value());
  double bound = mu_plus.value() + (K + 1) * std::max(min_gen, 1e-3) + 1.0;
  std::vector<ExactWeight> monoid = monoid_enumerate(generators, bound);
  if (std::find(monoid.begin(), monoid.end(), mu_plus) == monoid.end())
    throw std::invalid_argument("mu_plus is not an element of the monoid");
  std::vector<ExactWeight> out = {ExactWeight()};  // a_0 = 0
  ExactWeight current = mu_plus;                   // mu_plus + a_k
  for (int k = 0; k < K; ++k) {
    double cv = current.value();
    const ExactWeight* next = nullptr;
    for (const auto& w : monoid) {
      if (w.value() > cv + 1e-12 && w != current) {
        next = &w;
        break;
      }
    }
    if (!next) throw std::runtime_error("monoid enumeration bound exhausted");
    current = *next;
    out.push_back(current - mu_plus);
  }
  return out;
}

OpenInterval dirichlet_interval(const Rational& lambda, const Rational& calH) {
  if (lambda < Rational(0))
    throw std::invalid_argument("lambda < 0 unsupported for the Dirichlet interval");
  CriticalPair pr = critical_pair(lambda, calH);
  return {pr.minus, pr.plus};
}

}  // namespace hs
