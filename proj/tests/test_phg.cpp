#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "halfspace/oracle.hpp"
#include "halfspace/phg.hpp"

using namespace hs;

namespace {
ExactWeight W(long long q) { return ExactWeight::rational(Rational(q)); }

// Max coefficient deviation between two series with identical structure.
double series_dev(const PolySeries& a, const PolySeries& b) {
  PolySeries d = a - b;
  double dev = 0;
  for (const auto& t : d.terms()) dev = std::max(dev, std::abs(t.coeff));
  return dev;
}
}  // namespace

TEST_CASE("poly series algebra") {
  PolySeries a = PolySeries::term(2.0, 0, W(4));
  a.add_term(3.0, 1, W(4));
  a.add_term(-2.0, 0, W(4));  // cancels the first term exactly
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0].sigma == 1);

  PolySeries b = PolySeries::term(1.0, 0, W(3)) + PolySeries::term(5.0, 0, W(4));
  CHECK(b.floor_weight().value() == W(3));
  CHECK(b.component(W(4)).terms().size() == 1);
  CHECK(b.component(W(5)).empty());
  CHECK(b.evaluate(1.0) ==
        doctest::Approx(std::exp(-3.0) + 5 * std::exp(-4.0)).epsilon(1e-14));
  // Shifted evaluation avoids underflow: e^{8 s} * e^{-8 s} = 1 at s = 200.
  PolySeries tiny = PolySeries::term(1.0, 0, W(8));
  CHECK(tiny.evaluate_shifted(200.0, 8.0) == doctest::Approx(1.0));

  PolySeries prod = PolySeries::term(2.0, 1, W(3)) * PolySeries::term(4.0, 2, W(5));
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms()[0].sigma == 3);
  CHECK(prod.terms()[0].tau == W(8));
  CHECK(prod.terms()[0].coeff == doctest::Approx(8.0));
}

TEST_CASE("indicial action golden values") {
  RadialOperator op = RadialOperator::make(Rational(3), {Rational(0)});
  // I(e^{-4s}) = -(4 - 3)(4 - 0) e^{-4s} = -4 e^{-4s}.
  PolySeries u = PolySeries::term(1.0, 0, W(4));
  PolySeries Iu = apply_indicial_mode(op, 0, u);
  REQUIRE(Iu.terms().size() == 1);
  CHECK(Iu.terms()[0].coeff == doctest::Approx(-4.0));
  // Structural kernel: I(e^{-3s}) = 0 exactly (3 is the upper critical
  // weight), no floating-point residue.
  PolySeries k = apply_indicial_mode(op, 0, PolySeries::term(1.0, 0, W(3)));
  CHECK(k.empty());
  // Resonant power: I(s e^{-3s}) = (2*3 - 3) e^{-3s} = 3 e^{-3s}.
  PolySeries r = apply_indicial_mode(op, 0, PolySeries::term(1.0, 1, W(3)));
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms()[0].sigma == 0);
  CHECK(r.terms()[0].coeff == doctest::Approx(3.0));
}

TEST_CASE("G_inf golden value and right-inverse property") {
  RadialOperator op = RadialOperator::make(Rational(3), {Rational(0)});
  PolySeries u = PolySeries::term(1.0, 0, W(4));
  PolySeries g = G_inf(op, 0, u);
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms()[0].coeff == doctest::Approx(0.25).epsilon(1e-14));
  // I(G u) = -u.
  CHECK(series_dev(apply_indicial_mode(op, 0, g), u.scaled(-1.0)) < 1e-14);

  // Random polynomial inputs, sigma <= 3.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::uniform_int_distribution<int> sig(0, 3);
  std::uniform_int_distribution<int> tau(4, 9);
  for (int t = 0; t < 20; ++t) {
    PolySeries in;
    for (int j = 0; j < 3; ++j) in.add_term(c(rng), sig(rng), W(tau(rng)));
    if (in.empty()) continue;
    PolySeries out = G_inf(op, 0, in);
    CHECK(series_dev(apply_indicial_mode(op, 0, out), in.scaled(-1.0)) < 1e-12);
  }
}

TEST_CASE("G_0 golden values, right-inverse, resonance") {
  RadialOperator op = RadialOperator::make(Rational(3), {Rational(0)}, 10.0);
  // Non-resonant (tau = 2 between the critical weights 0 and 3):
  // G_0(e^{-2s}) = -e^{-2s}/2 + (e^{s0}/3) e^{-3s}.
  PolySeries u2 = PolySeries::term(1.0, 0, W(2));
  PolySeries g2 = G_0(op, 0, u2);
  PolySeries want2 = PolySeries::term(-0.5, 0, W(2)) +
                     PolySeries::term(std::exp(10.0) / 3.0, 0, W(3));
  CHECK(series_dev(g2, want2) < 1e-9 * std::exp(10.0));
  CHECK(series_dev(apply_indicial_mode(op, 0, g2), u2.scaled(-1.0)) < 1e-12);

  // Resonant (tau = alpha_+ = 3): G_0(e^{-3s}) = -e^{-3s}/9 - (s - s0) e^{-3s}/3,
  // carrying an s e^{-3s} term.
  PolySeries u3 = PolySeries::term(1.0, 0, W(3));
  PolySeries g3 = G_0(op, 0, u3);
  PolySeries want3 = PolySeries::term(-1.0 / 9 + 10.0 / 3, 0, W(3)) +
                     PolySeries::term(-1.0 / 3, 1, W(3));
  CHECK(series_dev(g3, want3) < 1e-12);
  CHECK(series_dev(apply_indicial_mode(op, 0, g3), u3.scaled(-1.0)) < 1e-12);

  // sigma = 1 resonant input gains an s^2 term.
  PolySeries gs = G_0(op, 0, PolySeries::term(1.0, 1, W(3)));
  bool has_s2 = false;
  for (const auto& t : gs.terms()) has_s2 |= (t.sigma == 2);
  CHECK(has_s2);
  CHECK(series_dev(apply_indicial_mode(op, 0, gs),
                   PolySeries::term(-1.0, 1, W(3))) < 1e-12);
}

TEST_CASE("right inverses over random operators") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> hnum(2, 6), lnum(0, 8);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::uniform_int_distribution<int> sig(0, 3);
  for (int t = 0; t < 20; ++t) {
    Rational H(hnum(rng)), lam(lnum(rng));
    RadialOperator op = RadialOperator::make(H, {lam}, 5.0);
    double ap = op.modes[0].alpha.plus.value();
    // G_inf input strictly above alpha_+.
    PolySeries uin = PolySeries::term(c(rng) + 3.0, sig(rng),
                                      op.modes[0].alpha.plus + W(2));
    CHECK(series_dev(apply_indicial_mode(op, 0, G_inf(op, 0, uin)),
                     uin.scaled(-1.0)) < 1e-10);
    // Resonant G_0 input exactly at alpha_+ (structurally).
    int s = sig(rng);
    PolySeries ures = PolySeries::term(1.5, s, op.modes[0].alpha.plus);
    PolySeries gres = G_0(op, 0, ures);
    int max_sigma = 0;
    for (const auto& term : gres.terms()) max_sigma = std::max(max_sigma, term.sigma);
    CHECK(max_sigma == s + 1);
    CHECK(series_dev(apply_indicial_mode(op, 0, gres), ures.scaled(-1.0)) < 1e-10);
    (void)ap;
  }
}

TEST_CASE("model problem iteration") {
  // -phi'' - 3 phi' + phi^2 = e^{-4s}, generators {1, 3}.
  ModelProblem prob;
  prob.op = RadialOperator::make(Rational(3), {Rational(0)});
  prob.cq = {1.0};
  prob.f = {PolySeries::term(1.0, 0, W(4))};
  prob.generators = {W(1), W(3)};
  PhgRun run = phg_iterate(prob, 4);
  REQUIRE(run.pass);
  CHECK(run.mu_plus == W(3));
  REQUIRE(run.steps.size() == 5);  // k = 0..4
  // Step at rung 4 solves the linearized equation: psi = -e^{-4s}/4.
  const IterationStep& s1 = run.steps[1];
  CHECK(s1.rung == W(4));
  REQUIRE(s1.psi[0].terms().size() == 1);
  CHECK(s1.psi[0].terms()[0].coeff == doctest::Approx(-0.25));
  CHECK(s1.branch[0] == 'i');
  // Later rungs have no forcing component.
  CHECK(run.steps[2].branch[0] == '-');
  // Final residual floor is e^{-8s}/16 and equals the next rung exactly.
  ModeSeries F = phg_residual(prob, run.phi);
  REQUIRE(F[0].terms().size() == 1);
  CHECK(F[0].terms()[0].tau == W(8));
  CHECK(F[0].terms()[0].coeff == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(run.steps[4].floor_equals_next);
  for (const auto& st : run.steps) CHECK(st.floor_ok);
}

TEST_CASE("resonant two-mode iteration uses G_0 and produces s e^{-4s}") {
  // Modes lambda = 0 (alpha_+ = 3) and lambda = 4 (alpha_+ = 4); forcing
  // on the second mode at weight 4 sits exactly at its critical weight.
  ModelProblem prob;
  prob.op = RadialOperator::make(Rational(3), {Rational(0), Rational(4)});
  prob.cq = {0.0, 0.0};
  prob.f = {PolySeries(), PolySeries::term(1.0, 0, W(4))};
  prob.generators = {W(1)};
  PhgRun run = phg_iterate(prob, 1);
  REQUIRE(run.pass);
  const IterationStep& s1 = run.steps[1];
  CHECK(s1.rung == W(4));
  CHECK(s1.branch[1] == '0');
  CHECK(s1.resonant[1]);
  bool has_se4 = false;
  for (const auto& t : s1.psi[1].terms())
    has_se4 |= (t.sigma == 1 && t.tau == W(4));
  CHECK(has_se4);
}

TEST_CASE("quadrature right inverse") {
  RadialOperator op = RadialOperator::make(Rational(3), {Rational(0)});
  std::vector<double> grid;
  for (double s = 0.0; s <= 12.0 + 1e-9; s += 0.05) grid.push_back(s);
  auto f = [](double s) { return std::exp(-4 * s) + std::exp(-5 * s); };
  QuadratureResult qr = G_quadrature(op, 0, f, grid);
  REQUIRE(qr.ok);
  CHECK(qr.residual < 1e-6);
  // Against the closed form G(e^{-4s} + e^{-5s}) = e^{-4s}/4 + 3 e^{-5s}/20...
  PolySeries closed = G_inf(op, 0, PolySeries::term(1.0, 0, W(4)) +
                                       PolySeries::term(1.0, 0, W(5)));
  double dev = 0;
  for (size_t i = 20; i + 20 < grid.size(); ++i)
    dev = std::max(dev, std::abs(qr.values[i] - closed.evaluate(grid[i])));
  CHECK(dev < 1e-7);

  // Refusal: decay e^{-2s} is not faster than e^{-alpha_+ s} = e^{-3s}.
  QuadratureResult bad =
      G_quadrature(op, 0, [](double s) { return std::exp(-2 * s); }, grid);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.message.empty());
}

TEST_CASE("dirichlet BVP oracle matches the linear closed form") {
  // -phi'' - 3 phi' = e^{-4s} has solution c + d e^{-3s} - e^{-4s}/4.
  RadialODE ode;
  ode.H = 3.0;
  ode.lambda = 0.0;
  ode.cq = 0.0;
  ode.f = [](double s) { return std::exp(-4 * s); };
  auto exact = [](double s) { return std::exp(-3 * s) - std::exp(-4 * s) / 4; };
  BvpSolution sol = solve_dirichlet_bvp(ode, 0.0, 4.0, exact(0.0), exact(4.0), 256);
  REQUIRE(sol.converged);
  double dev = 0;
  for (size_t i = 0; i < sol.s.size(); ++i)
    dev = std::max(dev, std::abs(sol.phi[i] - exact(sol.s[i])));
  CHECK(dev < 1e-6);
}

TEST_CASE("decay-difference oracle sees the e^{-8s} correction") {
  ModelProblem prob;
  prob.op = RadialOperator::make(Rational(3), {Rational(0)});
  prob.cq = {1.0};
  prob.f = {PolySeries::term(1.0, 0, W(4))};
  prob.generators = {W(1), W(3)};
  PhgRun run = phg_iterate(prob, 4);
  ModeSeries F = phg_residual(prob, run.phi);
  RadialODE ode;
  ode.H = 3.0;
  ode.lambda = 0.0;
  ode.cq = 1.0;
  ode.f = [](double s) { return std::exp(-4 * s); };
  DecayComparison dc =
      decay_difference_solve(ode, run.phi[0], F[0].scaled(-1.0), 8.0, 5.0, 15.0, 20.0);
  REQUIRE(dc.converged);
  CHECK(dc.ode_residual < 1e-8);
  CHECK(dc.slope == doctest::Approx(-8.0).epsilon(0.05));
}
