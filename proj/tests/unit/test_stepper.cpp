#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "nsfourier/diagnostics.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/random_fields.hpp"
#include "nsfourier/scenarios.hpp"
#include "nsfourier/stepper.hpp"

using namespace nsfourier;
using namespace nsfourier::testing;
using doctest::Approx;

namespace {

StepperConfig config(double tau, double nu, Scheme scheme = Scheme::SemiImplicitIterative) {
  StepperConfig c;
  c.tau = tau;
  c.nu = nu;
  c.scheme = scheme;
  return c;
}

SpectralVectorField simple_forcing(const PhysicalGrid& g) {
  // divergence-free part (sin y, sin x) plus a gradient the projection must remove
  return spectral2(
      g, [](double x, double y) { return std::sin(y) + std::cos(x); },
      [](double x, double) { return std::sin(x); });
}

}  // namespace

TEST_CASE("config validation and scheme names") {
  CHECK_THROWS_AS(config(0.0, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(config(-1.0, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(config(0.1, -1.0).validate(), ConfigError);
  StepperConfig c = config(0.1, 0.0);
  c.tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = config(0.1, 0.0);
  c.max_iterations = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_NOTHROW(config(0.1, 0.0).validate());
  CHECK(parse_scheme("picard") == Scheme::SemiImplicitIterative);
  CHECK(parse_scheme("krylov") == Scheme::SemiImplicitKrylov);
  CHECK(parse_scheme("explicit") == Scheme::ExplicitGuoZou);
  CHECK_THROWS_AS(parse_scheme("rk4"), ConfigError);
  for (Scheme s : {Scheme::SemiImplicitIterative, Scheme::SemiImplicitKrylov, Scheme::ExplicitGuoZou}) {
    CHECK(parse_scheme(to_string(s)) == s);
  }
}

TEST_CASE("implicit viscous solve") {
  const PhysicalGrid g(16);
  std::mt19937_64 rng(1);
  const auto v = random_vector_field(g, 7, 7, rng);
  CHECK(max_diff(implicit_viscous_solve(v, 0.3, 0.0), v) == 0.0);

  const auto mode = spectral2(g, [](double x, double) { return std::cos(2 * x); }, [](double, double) { return 0.0; });
  const auto solved = implicit_viscous_solve(mode, 0.1, 1.0);
  CHECK(std::abs(solved.u1().coeff(2, 0) - mode.u1().coeff(2, 0) / 1.4) < 1e-12);

  // (I - tau nu Lap) then the solve is the identity
  const double tau = 0.05, nu = 0.2;
  const SpectralVectorField applied(v.u1() - (tau * nu) * laplacian(v.u1()), v.u2() - (tau * nu) * laplacian(v.u2()));
  CHECK(max_diff(implicit_viscous_solve(applied, tau, nu), v) <= 1e-14 * max_abs(applied));
}

TEST_CASE("Picard step from rest") {
  const PhysicalGrid g(16);
  const auto zero = SpectralVectorField::zero(g, 7);
  const auto r = picard_step(zero, config(0.1, 0.5), 0.0);
  CHECK(r.iterations_used == 1);
  CHECK(max_abs(r.state) == 0.0);

  StepperConfig c = config(0.1, 0.5);
  const auto f = simple_forcing(g);
  c.forcing = [f](double) { return f; };
  const auto forced = picard_step(zero, c, 0.0);
  const auto expect = implicit_viscous_solve(0.1 * leray_project(f), 0.1, 0.5);
  CHECK(max_diff(forced.state, expect) <= 1e-13 * max_abs(expect));
  CHECK(max_divergence(forced.state) <= 1e-12 * l2_norm(forced.state));
}

TEST_CASE("Picard increments contract on Taylor-Green data") {
  const PhysicalGrid g(128);
  const auto u0 = taylor_green_family(2, g);
  const auto r = picard_step(u0, config(0.01, 1e-4), 0.0);
  CHECK(r.final_residual < 1e-10);
  REQUIRE(r.residuals.size() >= 2);
  for (double q : increment_ratios(r.residuals)) CHECK(q < 1.0);
  CHECK(max_divergence(r.state) <= 1e-12 * l2_norm(r.state));
}

TEST_CASE("Picard exhaustion raises a convergence error") {
  const PhysicalGrid g(32);
  StepperConfig c = config(0.01, 1e-4);
  c.max_iterations = 2;
  try {
    picard_step(taylor_green_family(2, g), c, 0.0);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() == 2);
    CHECK(e.last_residual() > 1e-10);
  }
}

TEST_CASE("explicit step") {
  const PhysicalGrid g(16);
  const auto zero = SpectralVectorField::zero(g, 7);
  CHECK(max_abs(explicit_step(zero, config(0.1, 0.5, Scheme::ExplicitGuoZou), 0.0).state) == 0.0);

  StepperConfig c = config(0.1, 0.5);
  const auto f = simple_forcing(g);
  c.forcing = [f](double) { return f; };
  const auto a = picard_step(zero, c, 0.0).state;
  const auto b = explicit_step(zero, c, 0.0).state;
  CHECK(max_diff(a, b) == 0.0);
}

TEST_CASE("explicit and semi-implicit single steps differ at second order") {
  const PhysicalGrid g(32);
  const auto u0 = taylor_green_family(2, g);
  double prev = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double tau = 0.02 / (1 << k);
    const auto a = picard_step(u0, config(tau, 1e-3), 0.0).state;
    const auto b = explicit_step(u0, config(tau, 1e-3, Scheme::ExplicitGuoZou), 0.0).state;
    const double d = l2_norm(a - b);
    if (k > 0) CHECK(prev / d == Approx(4.0).epsilon(0.05));
    prev = d;
  }
}

TEST_CASE("Krylov solve agrees with Picard where both converge") {
  const PhysicalGrid g(32);
  const auto u0 = taylor_green_family(8, g);
  StepperConfig c = config(0.01, 1e-3);
  c.tolerance = 1e-12;
  const auto p = picard_step(u0, c, 0.0);
  c.scheme = Scheme::SemiImplicitKrylov;
  const auto k = krylov_step(u0, c, 0.0);
  CHECK(l2_norm(p.state - k.state) <= 1e-10 * l2_norm(p.state));
  CHECK(max_divergence(k.state) <= 1e-12 * l2_norm(k.state));
}

TEST_CASE("Krylov solve handles steps far beyond the Picard condition") {
  const PhysicalGrid g(32);
  const auto u0 = taylor_green_family(2, g);
  StepperConfig c = config(1.0, 1e-4, Scheme::SemiImplicitKrylov);
  const auto r = krylov_step(u0, c, 0.0);
  CHECK(l2_norm(r.state) <= l2_norm(u0) + 1e-12);
  // the returned state solves (I + tau nu(-Lap) + tau P Pi_N(u0 . grad)) x = u0
  const auto residual = r.state - (c.tau * c.nu) * SpectralVectorField(laplacian(r.state.u1()), laplacian(r.state.u2())) +
                        c.tau * convective_term(u0, r.state) - u0;
  CHECK(l2_norm(residual) <= 1e-8 * l2_norm(u0));
  c.scheme = Scheme::SemiImplicitIterative;
  CHECK_THROWS_AS(picard_step(u0, config(1.0, 1e-4), 0.0), NumericalError);
}

TEST_CASE("advance dispatches on the scheme") {
  const PhysicalGrid g(16);
  const auto u0 = taylor_green_family(2, g);
  const auto e = advance(u0, config(0.01, 0.0, Scheme::ExplicitGuoZou), 0.0);
  CHECK(e.iterations_used == 1);
  const auto p = advance(u0, config(0.01, 0.0), 0.0);
  CHECK(p.iterations_used > 1);
}

TEST_CASE("run step counting and projection of the initial data") {
  const PhysicalGrid g(16);
  CHECK(step_count(1.0, 0.1) == 10);
  CHECK(step_count(2.0, 0.1 / 32) == 640);
  CHECK_THROWS_AS(step_count(1.0, 0.3), ConfigError);
  CHECK_THROWS_AS(step_count(0.0, 0.1), ConfigError);

  const auto u0 = taylor_green_family(2, g);
  const auto one = run(u0, config(0.05, 1e-3), 0.05);
  CHECK(one.records.size() == 2);
  CHECK(one.records.back().step == 1);
  CHECK(one.records.back().time == Approx(0.05));

  // a gradient component in u0 is projected away before stepping
  const auto grad = spectral2(g, [](double x, double) { return std::cos(x); }, [](double, double) { return 0.0; });
  StepperConfig c = config(0.05, 1e-3);
  c.truncation = 3;
  const auto out = run(u0 + grad, c, 0.05);
  CHECK(out.records.front().l2_energy == Approx(l2_norm(truncate(u0, 3))).epsilon(1e-12));
  CHECK(out.final_state.u1().coeff(4, 0) == Complex{});
}

TEST_CASE("run reports the failing step") {
  const PhysicalGrid g(32);
  StepperConfig c = config(0.01, 1e-4);
  const auto u0 = taylor_green_family(2, g);
  c.max_iterations = 8;
  // fine for the first steps, then made to fail through forcing that blows up at t >= 0.03
  c.forcing = [g](double t) {
    const double scale = t >= 0.03 - 1e-12 ? 1e300 : 0.0;
    return scale * taylor_green_family(2, g);
  };
  try {
    run(u0, c, 0.1);
    FAIL("expected StepFailure");
  } catch (const StepFailure& e) {
    CHECK(e.step() == 4);
  }
}

TEST_CASE("unforced runs dissipate energy and keep Sobolev norms bounded") {
  const PhysicalGrid g(64);
  const auto u0 = taylor_green_family(2, g);
  RunOptions opts;
  opts.sobolev_orders = {2.5, 3.0};
  const auto out = run(u0, config(0.01, 1e-4), 1.0, opts);
  CHECK(energy_monitor(out.records, false).clean());
  CHECK(max_growth_factor(out.records, 3.0) <= 4.0);
  CHECK(max_growth_factor(out.records, 2.5) <= 4.0);
  for (const auto& r : out.records) CHECK(r.picard_iterations <= 200);
}

TEST_CASE("observers see every step and trajectories are deterministic") {
  const PhysicalGrid g(32);
  const auto u0 = taylor_green_family(8, g);
  long seen = 0;
  RunOptions opts;
  opts.observers.push_back([&](const StepObservation& o) {
    ++seen;
    CHECK(o.step == seen);
    CHECK(max_divergence(o.result.state) <= 1e-12 * l2_norm(o.result.state));
  });
  const auto a = run(u0, config(0.01, 1e-3), 0.2, opts);
  const auto b = run(u0, config(0.01, 1e-3), 0.2);
  CHECK(seen == 20);
  CHECK(max_diff(a.final_state, b.final_state) == 0.0);
}

TEST_CASE("the H1 monitor flags a non-dissipative sequence") {
  const PhysicalGrid g(16);
  const auto u = taylor_green_family(2, g);
  H1DissipationMonitor mon;
  StepResult grown{2.0 * u, 1, 0.0, {}};
  mon.observe({1, 0.1, u, grown});
  StepResult shrunk{0.5 * u, 1, 0.0, {}};
  mon.observe({2, 0.2, u, shrunk});
  CHECK(mon.violations() == std::vector<long>{1});
  CHECK(mon.steps_seen() == 2);
  CHECK(mon.worst_excess() > 0.0);
}
