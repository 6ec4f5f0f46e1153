#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "nsfourier/diagnostics.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/random_fields.hpp"
#include "nsfourier/scenarios.hpp"

using namespace nsfourier;
using namespace nsfourier::testing;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

// Grid value of a spectral scalar at node (j1, j2).
double at(const SpectralScalarField& f, int j1, int j2) { return inverse_transform(f).at(0, j2, j1); }

double mean(const SpectralScalarField& f) { return f.coeff(0, 0).real() / (4 * kPi * kPi); }
}  // namespace

TEST_CASE("Taylor-Green family point values and divergence") {
  const PhysicalGrid g(16);
  // (pi/2, 0) is node (4, 0) on a 16 grid
  const auto u1 = inverse_transform(taylor_green_family(1, g));
  CHECK(std::abs(u1.at(0, 0, 4)) < 1e-14);
  CHECK(u1.at(1, 0, 4) == Approx(0.5).epsilon(1e-14));
  for (int m : {1, 2, 3, 8, 20}) {
    CAPTURE(m);
    const PhysicalGrid big(64);
    const auto u = taylor_green_family(m, big);
    CHECK(max_divergence(u) <= 1e-12 * l2_norm(u));
    CHECK(std::abs(u.u1().coeff(0, 0)) + std::abs(u.u2().coeff(0, 0)) <= 1e-12 * max_abs(u));
  }
  CHECK_THROWS_AS(taylor_green_family(0, g), ConfigError);
}

TEST_CASE("Taylor-Green m=2 is band limited to |k| <= 3") {
  const PhysicalGrid g(32);
  const auto u = taylor_green_family(2, g);
  double outside = 0.0;
  for (int k2 = -15; k2 <= 15; ++k2) {
    for (int k1 = -15; k1 <= 15; ++k1) {
      if (std::max(std::abs(k1), std::abs(k2)) <= 3) continue;
      outside = std::max({outside, std::abs(u.u1().coeff(k1, k2)), std::abs(u.u2().coeff(k1, k2))});
    }
  }
  CHECK(outside <= 1e-12);
}

TEST_CASE("Taylor-Green m=1 vorticity is cos x cos y") {
  const PhysicalGrid g(16);
  const auto w = vorticity_snapshot(taylor_green_family(1, g));
  for (int j2 = 0; j2 < 16; ++j2) {
    for (int j1 = 0; j1 < 16; ++j1) {
      CHECK(w.at(0, j2, j1) == Approx(std::cos(g.node(j1)) * std::cos(g.node(j2))).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("double shear layer vorticity") {
  const PhysicalGrid g(128);
  const auto w = double_shear_vorticity(kPi / 15, g);
  // y = -pi/2 maps to node j2 = 96, y = +pi/2 to node 32
  CHECK(at(w, 0, 96) == Approx(-0.05 - 15 / kPi).epsilon(1e-10));
  CHECK(at(w, 0, 32) == Approx(-0.05 + 15 / kPi).epsilon(1e-10));
  CHECK(std::abs(mean(w)) < 1e-3);
  CHECK_THROWS_AS(double_shear_vorticity(0.0, g), ConfigError);
}

TEST_CASE("Gaussian vortices vorticity") {
  const PhysicalGrid g(64);
  const auto w = gaussian_vortices_vorticity(g);
  CHECK(at(w, 0, 0) == Approx(2 * std::exp(-5 * kPi * kPi / 16)).epsilon(1e-10));
  CHECK(at(w, 8, 0) == Approx(1.0 + std::exp(-5 * kPi * kPi / 4)).epsilon(1e-10));
  const auto p = inverse_transform(w);
  for (int j2 = 0; j2 < 64; ++j2) {
    for (int j1 = 1; j1 < 64; ++j1) CHECK(std::abs(p.at(0, j2, j1) - p.at(0, j2, 64 - j1)) < 1e-12);
  }
}

TEST_CASE("coordinate centring") {
  CHECK(centered_coordinate(0.0) == 0.0);
  CHECK(centered_coordinate(kPi) == Approx(kPi));
  CHECK(centered_coordinate(1.5 * kPi) == Approx(-0.5 * kPi));
}

TEST_CASE("velocity from vorticity") {
  const PhysicalGrid g(16);
  const auto w = spectral(g, [](double x, double) { return std::cos(x); });
  const auto u = velocity_from_vorticity(w);
  const auto expect = spectral2(g, [](double, double) { return 0.0; }, [](double x, double) { return std::sin(x); });
  CHECK(max_diff(u, expect) <= 1e-12 * max_abs(expect));
  CHECK(max_abs(velocity_from_vorticity(SpectralScalarField(g, 7))) == 0.0);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_scalar_field(g, 7, 7, rng);
    const auto v = velocity_from_vorticity(f);
    CHECK(max_divergence(v) <= 1e-12 * l2_norm(v));
    ComplexBuffer mf(f.coefficients().begin(), f.coefficients().end());
    mf[0] = 0.0;
    CHECK(max_diff(curl(v), SpectralScalarField(g, 7, mf)) <= 1e-12 * f.max_abs());
  }
}

TEST_CASE("manufactured solution") {
  const PhysicalGrid g(32);
  const auto u0 = inverse_transform(manufactured_velocity(0.0, g));
  CHECK(u0.at(0, 0, 8) == Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(u0.at(1, 0, 8)) < 1e-14);
  for (double t : {0.0, 0.3, 1.0}) {
    const auto ut = manufactured_velocity(t, g);
    CHECK(l2_norm(ut) == Approx(kPi / std::sqrt(2.0) * std::exp(-t)).epsilon(1e-13));
    CHECK(max_diff(ut, std::exp(-t) * manufactured_velocity(0.0, g)) <= 1e-12 * max_abs(ut));
  }
  CHECK_THROWS_AS(manufactured_velocity(-1.0, g), ConfigError);
}

TEST_CASE("manufactured forcing is minus the velocity") {
  const PhysicalGrid g(128);
  const ManufacturedForcing cached(g);
  for (double t : {0.0, 0.5, 1.0}) {
    const auto f = manufactured_forcing(t, ForcingMode::EulerForcing, g);
    const auto u = manufactured_velocity(t, g);
    CHECK(l2_norm(f + u) <= 1e-10);
    CHECK(max_diff(f, -1.0 * u) <= 1e-12 * max_abs(u));
    CHECK(max_diff(leray_project(f), f) <= 1e-12 * max_abs(f));
    CHECK(max_diff(cached(t), f) <= 1e-12 * max_abs(f));
  }
}

TEST_CASE("named scenarios") {
  const PhysicalGrid g(32);
  for (const char* name : {"taylor-green", "double-shear", "gaussian-vortices", "manufactured"}) {
    CAPTURE(name);
    const auto s = make_scenario(name, g);
    CHECK(s.name == name);
    const auto& u = s.initial_velocity;
    CHECK(max_divergence(u) <= 1e-12 * l2_norm(u));
    CHECK(std::abs(u.u1().coeff(0, 0)) + std::abs(u.u2().coeff(0, 0)) <= 1e-12 * max_abs(u));
  }
  const auto m = make_scenario("manufactured", g);
  REQUIRE(m.exact_solution);
  REQUIRE(m.forcing);
  CHECK(max_diff(m.exact_solution(0.0), m.initial_velocity) <= 1e-12);
  CHECK_FALSE(make_scenario("taylor-green", g).forcing);
  ScenarioParams p;
  p.taylor_green_m = 8;
  CHECK(max_diff(make_scenario("taylor-green", g, p).initial_velocity, taylor_green_family(8, g)) == 0.0);
  CHECK_THROWS_AS(make_scenario("kelvin-helmholtz", g), ConfigError);
}
