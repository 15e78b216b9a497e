#include "halfspace/phg.hpp"

#include <algorithm>
#include <cmath>

namespace hs {

namespace {

double factorial_ratio(int sigma, int j) {  // sigma! / (sigma-j)!
  double v = 1;
  for (int i = 0; i < j; ++i) v *= sigma - i;
  return v;
}

// Coefficients of R_mu with  mu R - R' = s^sigma  (integration from
// +infinity):  R = sum_j sigma!/(sigma-j)! s^{sigma-j} / mu^{j+1}.
std::vector<double> poly_R(int sigma, double mu) {
  std::vector<double> c(sigma + 1);  // c[j] multiplies s^{sigma-j}
  for (int j = 0; j <= sigma; ++j)
    c[j] = factorial_ratio(sigma, j) / std::pow(mu, j + 1);
  return c;
}

// Coefficients of S with  mu S + S' = s^sigma  (integration from s0):
// S = sum_j (-1)^j sigma!/(sigma-j)! s^{sigma-j} / mu^{j+1}.
std::vector<double> poly_S(int sigma, double mu) {
  std::vector<double> c(sigma + 1);
  for (int j = 0; j <= sigma; ++j)
    c[j] = (j % 2 ? -1.0 : 1.0) * factorial_ratio(sigma, j) / std::pow(mu, j + 1);
  return c;
}

double poly_eval(const std::vector<double>& c, int sigma, double s) {
  double v = 0;
  for (int j = 0; j <= sigma; ++j) v += c[j] * std::pow(s, sigma - j);
  return v;
}

ModeSeries zero_like(size_t n) { return ModeSeries(n); }

}  // namespace

RadialOperator RadialOperator::make(const Rational& calH,
                                    const std::vector<Rational>& lambdas,
                                    double s0) {
  RadialOperator op;
  op.calH = calH;
  op.s0 = s0;
  for (const auto& l : lambdas) op.modes.push_back({l, critical_pair(l, calH)});
  if (op.modes.empty()) throw std::invalid_argument("operator needs at least one mode");
  return op;
}

PolySeries apply_indicial_mode(const RadialOperator& op, int mode,
                               const PolySeries& u) {
  const auto& md = op.modes.at(mode);
  const double H = op.calH.value();
  PolySeries out;
  for (const auto& t : u.terms()) {
    ExactWeight dp = t.tau - md.alpha.plus;
    ExactWeight dm = t.tau - md.alpha.minus;
    if (!dp.is_zero() && !dm.is_zero()) {
      out = out + PolySeries::term(-dp.value() * dm.value() * t.coeff, t.sigma, t.tau);
    }
    if (t.sigma >= 1)
      out = out + PolySeries::term(
                      t.sigma * (2 * t.tau.value() - H) * t.coeff, t.sigma - 1, t.tau);
    if (t.sigma >= 2)
      out = out + PolySeries::term(
                      -static_cast<double>(t.sigma) * (t.sigma - 1) * t.coeff,
                      t.sigma - 2, t.tau);
  }
  return out;
}

ModeSeries apply_indicial(const RadialOperator& op, const ModeSeries& u) {
  if (u.size() != op.modes.size())
    throw std::invalid_argument("mode count mismatch");
  ModeSeries out(u.size());
  for (size_t i = 0; i < u.size(); ++i)
    out[i] = apply_indicial_mode(op, static_cast<int>(i), u[i]);
  return out;
}

PolySeries G_inf(const RadialOperator& op, int mode, const PolySeries& u) {
  const auto& md = op.modes.at(mode);
  const double ap = md.alpha.plus.value(), am = md.alpha.minus.value();
  PolySeries out;
  for (const auto& t : u.terms()) {
    if (t.tau == md.alpha.plus || t.tau.value() <= ap + 1e-14)
      throw std::domain_error(
          "G_inf needs weight > alpha_+; use G_0 for this term");
    double mp = t.tau.value() - ap, mm = t.tau.value() - am;
    auto Rp = poly_R(t.sigma, mp), Rm = poly_R(t.sigma, mm);
    for (int j = 0; j <= t.sigma; ++j) {
      double c = t.coeff * (Rp[j] - Rm[j]) / (ap - am);
      if (c != 0.0) out = out + PolySeries::term(c, t.sigma - j, t.tau);
    }
  }
  return out;
}

PolySeries G_0(const RadialOperator& op, int mode, const PolySeries& u) {
  const auto& md = op.modes.at(mode);
  const double ap = md.alpha.plus.value(), am = md.alpha.minus.value();
  const double s0 = op.s0;
  PolySeries out;
  for (const auto& t : u.terms()) {
    bool resonant = (t.tau == md.alpha.plus);
    if (!resonant && t.tau.value() > ap + 1e-14)
      throw std::domain_error("G_0 needs weight <= alpha_+; use G_inf");
    if (t.tau.value() <= am + 1e-14)
      throw std::domain_error("G_0 needs weight > alpha_-");
    // First piece, common to both cases (integration from +infinity):
    //   -e^{-tau s} R_{tau - alpha_-}(s) / (alpha_+ - alpha_-)
    double mm = t.tau.value() - am;
    auto Rm = poly_R(t.sigma, mm);
    for (int j = 0; j <= t.sigma; ++j) {
      double c = -t.coeff * Rm[j] / (ap - am);
      if (c != 0.0) out = out + PolySeries::term(c, t.sigma - j, t.tau);
    }
    if (resonant) {
      // -e^{-a+ s} (s^{sigma+1} - s0^{sigma+1}) / ((sigma+1)(a+ - a-))
      double c = -t.coeff / ((t.sigma + 1.0) * (ap - am));
      out = out + PolySeries::term(c, t.sigma + 1, t.tau);
      out = out + PolySeries::term(-c * std::pow(s0, t.sigma + 1), 0, t.tau);
    } else {
      // -e^{-tau s} S(s)/(a+ - a-)  +  e^{(a+ - tau)s0} S(s0)/(a+ - a-) e^{-a+ s}
      double mp = ap - t.tau.value();
      auto S = poly_S(t.sigma, mp);
      for (int j = 0; j <= t.sigma; ++j) {
        double c = -t.coeff * S[j] / (ap - am);
        if (c != 0.0) out = out + PolySeries::term(c, t.sigma - j, t.tau);
      }
      double endpoint = t.coeff * std::exp(mp * s0) *
                        poly_eval(S, t.sigma, s0) / (ap - am);
      out = out + PolySeries::term(endpoint, 0, md.alpha.plus);
    }
  }
  return out;
}

ModeSeries phg_residual(const ModelProblem& problem, const ModeSeries& phi) {
  ModeSeries F = apply_indicial(problem.op, phi);
  PolySeries total;
  for (const auto& p : phi) total = total + p;
  PolySeries sq = total * total;
  for (size_t i = 0; i < F.size(); ++i)
    F[i] = F[i] + sq.scaled(problem.cq.at(i)) - problem.f.at(i);
  return F;
}

PhgRun phg_iterate(const ModelProblem& problem, int K) {
  const auto& op = problem.op;
  const size_t nm = op.modes.size();
  if (problem.f.size() != nm || problem.cq.size() != nm)
    throw std::invalid_argument("problem data has wrong mode count");

  PhgRun run;
  run.mu_plus = op.modes[0].alpha.plus;
  for (const auto& md : op.modes)
    if (md.alpha.plus.value() < run.mu_plus.value()) run.mu_plus = md.alpha.plus;
  run.ladder_values = ladder(run.mu_plus, problem.generators, K + 1);

  for (const auto& fi : problem.f)
    if (auto fl = fi.floor_weight();
        fl && fl->value() <= run.mu_plus.value() + 1e-12)
      throw std::invalid_argument("forcing floor must exceed mu_plus");

  ModeSeries phi = zero_like(nm);
  bool all_ok = true;
  for (int k = 0; k <= K; ++k) {
    IterationStep step;
    step.rung = run.mu_plus + run.ladder_values[k];
    ModeSeries Fk = phg_residual(problem, phi);
    step.psi = zero_like(nm);
    step.branch.assign(nm, '-');
    step.resonant.assign(nm, false);
    for (size_t i = 0; i < nm; ++i) {
      PolySeries comp = Fk[i].component(step.rung);
      if (comp.empty()) continue;
      const auto& ap = op.modes[i].alpha.plus;
      bool use_ginf = !(step.rung == ap) && step.rung.value() > ap.value();
      step.branch[i] = use_ginf ? 'i' : '0';
      step.resonant[i] = (step.rung == ap);
      step.psi[i] = use_ginf ? G_inf(op, static_cast<int>(i), comp)
                             : G_0(op, static_cast<int>(i), comp);
    }
    for (size_t i = 0; i < nm; ++i) phi[i] = phi[i] + step.psi[i];

    // Check the residual floor against the next rung.  A cleared rung can
    // leave roundoff dust (I(G u) + u cancels only to machine precision),
    // so terms far below the residual's own scale are ignored.
    ModeSeries Fnext = phg_residual(problem, phi);
    double scale = 1.0;
    for (const auto& Fi : Fnext)
      for (const auto& t : Fi.terms()) scale = std::max(scale, std::abs(t.coeff));
    std::optional<ExactWeight> fl;
    for (const auto& Fi : Fnext)
      for (const auto& t : Fi.terms()) {
        if (std::abs(t.coeff) < 1e-12 * scale) continue;
        if (!fl || t.tau.value() < fl->value()) fl = t.tau;
      }
    step.residual_floor = fl;
    ExactWeight next_rung = run.mu_plus + run.ladder_values[k + 1];
    step.floor_ok = !fl || fl->value() >= next_rung.value() - 1e-9;
    step.floor_equals_next = fl && *fl == next_rung;
    if (!step.floor_ok) {
      all_ok = false;
      run.message = "residual floor dropped below the next ladder rung " +
                    next_rung.str();
    }
    run.steps.push_back(std::move(step));
  }
  run.phi = phi;
  run.pass = all_ok;
  if (run.message.empty()) run.message = "ok";
  return run;
}

namespace {

// Adaptive Simpson on [a,b].
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  double err = left + right - whole;
  if (depth <= 0 || std::abs(err) < 15 * tol)
    return left + right + err / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, 40);
}

}  // namespace

QuadratureResult G_quadrature(const RadialOperator& op, int mode,
                              const std::function<double(double)>& f,
                              const std::vector<double>& grid) {
  QuadratureResult res;
  const auto& md = op.modes.at(mode);
  const double ap = md.alpha.plus.value(), am = md.alpha.minus.value();
  if (grid.size() < 8) {
    res.message = "grid too small for a tail estimate";
    return res;
  }
  // Least-squares slope of log|f| over the last third of the grid.
  size_t start = grid.size() - grid.size() / 3;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (size_t i = start; i < grid.size(); ++i) {
    double v = std::abs(f(grid[i]));
    if (v < 1e-280) continue;
    double x = grid[i], y = std::log(v);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  if (cnt < 4) {
    res.message = "too few usable tail samples";
    return res;
  }
  double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  res.tail_slope = slope;
  double tau_hat = -slope;
  if (tau_hat <= ap + 0.05) {
    res.message = "insufficient decay: measured tail slope " +
                  std::to_string(slope) + " vs required < " +
                  std::to_string(-ap);
    return res;
  }
  // Truncation point: e^{-(tau_hat - alpha_+) S} < 1e-10 beyond the grid.
  double smax = grid.back() + std::log(1e10) / (tau_hat - ap);
  res.s_max = smax;
  const double tol = 1e-13;
  auto eval_G = [&](double s) {
    auto up = [&](double x) { return std::exp(ap * (x - s)) * f(x); };
    auto um = [&](double x) { return std::exp(am * (x - s)) * f(x); };
    // A_pm = int_s^{smax} e^{alpha_pm (x - s)} f(x) dx  (the e^{-alpha s}
    // prefactor is folded into the integrand to avoid overflow).
    double Ap = integrate(up, s, smax, tol);
    double Am = integrate(um, s, smax, tol);
    return (Ap - Am) / (ap - am);
  };
  res.values.reserve(grid.size());
  for (double s : grid) res.values.push_back(eval_G(s));
  // Residual check with a 4th-order stencil on directly evaluated G.
  const double H = op.calH.value(), lam = md.lambda.value();
  const double h = 2e-3;
  double worst = 0;
  for (size_t i = 1; i + 1 < grid.size(); i += std::max<size_t>(1, grid.size() / 16)) {
    double s = grid[i];
    double g0 = res.values[i];
    double gp1 = eval_G(s + h), gm1 = eval_G(s - h);
    double gp2 = eval_G(s + 2 * h), gm2 = eval_G(s - 2 * h);
    double d1 = (8 * (gp1 - gm1) - (gp2 - gm2)) / (12 * h);
    double d2 = (-gp2 + 16 * gp1 - 30 * g0 + 16 * gm1 - gm2) / (12 * h * h);
    worst = std::max(worst, std::abs(d2 + H * d1 - lam * g0 - f(s)));
  }
  res.residual = worst;
  res.ok = worst < 1e-6;
  res.message = res.ok ? "ok" : "residual above tolerance";
  return res;
}

}  // namespace hs
