#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "../support/oracles.hpp"
#include "nsfourier/diagnostics.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/scenarios.hpp"
#include "nsfourier/snapshot.hpp"
#include "nsfourier/sweep.hpp"

using namespace nsfourier;
using namespace nsfourier::testing;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}
}  // namespace

TEST_CASE("norm tokens") {
  CHECK(parse_norm("L2").kind == NormKind::L2);
  CHECK(parse_norm("Linf").kind == NormKind::Linf);
  CHECK(parse_norm("Linf_max").kind == NormKind::LinfMax);
  const auto h = parse_norm(" H6 ");
  CHECK(h.kind == NormKind::Sobolev);
  CHECK(h.s == 6.0);
  CHECK(h.label == "H6");
  const auto hf = parse_norm("H2.5_fourier");
  CHECK(hf.kind == NormKind::SobolevFourier);
  CHECK(hf.s == 2.5);
  CHECK(parse_norm_list("L2,Linf,H1,H6").size() == 4);
  CHECK_THROWS_AS(parse_norm("L3"), ConfigError);
  CHECK_THROWS_AS(parse_norm("H"), ConfigError);
  CHECK_THROWS_AS(parse_norm("H-1"), ConfigError);
  CHECK_THROWS_AS(parse_norm_list(" , "), ConfigError);
  CHECK_FALSE(norm_conventions_note().empty());
}

TEST_CASE("error norms of exact and shifted fields") {
  const PhysicalGrid g(16);
  const auto u = taylor_green_family(2, g);
  const auto all = parse_norm_list("L2,Linf,Linf_max,H1,H6,H3_fourier");
  for (const auto& [label, v] : error_norms(u, u, all)) CHECK(v == 0.0);

  const double c = -0.3;
  const auto shift = spectral2(g, [c](double, double) { return c; }, [](double, double) { return 0.0; });
  const auto e = error_norms(u + shift, u, all);
  CHECK(e[0].second == Approx(kTwoPi * std::abs(c)).epsilon(1e-12));
  CHECK(e[1].second == Approx(std::abs(c)).epsilon(1e-12));
  CHECK(e[2].second == Approx(std::abs(c)).epsilon(1e-12));
  CHECK(error_norm(u + shift, u, parse_norm("H3_fourier")) == Approx(kTwoPi * std::abs(c)).epsilon(1e-12));
  CHECK_THROWS_AS(error_norms(u, taylor_green_family(2, PhysicalGrid(8)), all), ConfigError);
}

TEST_CASE("table conventions for a single |k|^2 = 2 error mode") {
  // e = a (-sin x cos y, cos x sin y): the column ratios of the published tables
  const PhysicalGrid g(32);
  const double a = 0.01;
  const auto e = spectral2(
      g, [a](double x, double y) { return -a * std::sin(x) * std::cos(y); },
      [a](double x, double y) { return a * std::cos(x) * std::sin(y); });
  const auto zero = SpectralVectorField::zero(g, 15);
  const auto n = error_norms(e, zero, parse_norm_list("L2,Linf,Linf_max,H1,H6,H1_fourier"));
  const double l2 = n[0].second;
  CHECK(l2 == Approx(a * kPi * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(n[1].second / l2 == Approx(std::sqrt(2.0) / kPi).epsilon(1e-12));  // sum of component maxima
  CHECK(n[2].second == Approx(a).epsilon(1e-12));
  CHECK(n[3].second / l2 == Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(n[4].second / l2 == Approx(9.0).epsilon(1e-12));
  CHECK(n[5].second / l2 == Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("errors compare fields of different truncation on the wider band") {
  const PhysicalGrid g(32);
  const auto u = taylor_green_family(8, g);
  const auto t = truncate(u, 5);
  const SpectralVectorField narrow(SpectralScalarField(g, 5, ComplexBuffer(t.u1().coefficients().begin(), t.u1().coefficients().end())),
                                   SpectralScalarField(g, 5, ComplexBuffer(t.u2().coefficients().begin(), t.u2().coefficients().end())));
  CHECK(error_norm(narrow, u, parse_norm("L2")) == Approx(l2_norm(u - t)).epsilon(1e-12));
}

TEST_CASE("energy monitor") {
  std::vector<DiagnosticsRecord> recs(3);
  recs[0].l2_energy = 1.0;
  recs[1].l2_energy = 1.0 + 5e-13;
  recs[2].l2_energy = 1.1;
  recs[1].step = 1;
  recs[2].step = 2;
  const auto rep = energy_monitor(recs, false);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].step == 2);
  const auto forced = energy_monitor(recs, true);
  CHECK_FALSE(forced.enabled);
  CHECK(forced.clean());

  const PhysicalGrid g(32);
  StepperConfig c;
  c.tau = 0.01;
  const auto zero_run = run(SpectralVectorField::zero(g, 15), c, 0.1);
  CHECK(energy_monitor(zero_run.records, false).clean());
}

TEST_CASE("energy monitor on the double shear layer") {
  const PhysicalGrid g(64);
  StepperConfig c;
  c.tau = 1e-3;
  c.nu = 1e-3;
  const auto out = run(make_scenario("double-shear", g).initial_velocity, c, 0.1);
  CHECK(out.records.size() == 101);
  CHECK(energy_monitor(out.records, false).clean());
}

TEST_CASE("growth factor and increment ratios") {
  std::vector<DiagnosticsRecord> recs(3);
  recs[0].hs_norms[3.0] = 2.0;
  recs[1].hs_norms[3.0] = 5.0;
  recs[2].hs_norms[3.0] = 1.0;
  CHECK(max_growth_factor(recs, 3.0) == 2.5);
  CHECK(max_growth_factor(recs, 2.0) == 0.0);
  const auto q = increment_ratios({1.0, 0.25, 0.05});
  REQUIRE(q.size() == 2);
  CHECK(q[0] == 0.25);
  CHECK(q[1] == Approx(0.2));
  CHECK(increment_ratios({1.0}).empty());
}

TEST_CASE("vorticity snapshots") {
  const PhysicalGrid g(16);
  const auto u = spectral2(g, [](double, double) { return 0.0; }, [](double x, double) { return std::sin(x); });
  const auto w = vorticity_snapshot(u);
  for (int j1 = 0; j1 < 16; ++j1) CHECK(w.at(0, 3, j1) == Approx(std::cos(g.node(j1))).scale(1.0).epsilon(1e-13));
  const auto z = vorticity_snapshot(SpectralVectorField::zero(g, 7));
  for (double v : z.values()) CHECK(v == 0.0);
}

TEST_CASE("snapshot files round trip exactly") {
  const PhysicalGrid g(8);
  const auto u = inverse_transform(taylor_green_family(3, g));
  std::stringstream buf;
  write_snapshot(buf, u, 0.125);
  const std::string text = buf.str();
  const auto ls = lines(text);
  REQUIRE(ls.size() == 1 + 2 * 8);
  CHECK(ls[0] == "M=8 components=2 time=0.125");
  const auto back = read_snapshot(buf);
  CHECK(back.time == 0.125);
  CHECK(back.field.components() == 2);
  CHECK(max_diff(back.field, u) == 0.0);

  std::istringstream bad_header("M=8 comps=2 time=0\n");
  CHECK_THROWS_AS(read_snapshot(bad_header), ConfigError);
  std::istringstream short_data("M=4 components=1 time=0\n1,2,3,4\n");
  CHECK_THROWS_AS(read_snapshot(short_data), ConfigError);
  PhysicalField nan_field(g, 1);
  nan_field.at(0, 0, 0) = std::nan("");
  std::stringstream sink;
  CHECK_THROWS_AS(write_snapshot(sink, nan_field, 0.0), NumericalError);
}

TEST_CASE("format_double is the shortest round-trip form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-5) == "1e-05");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("diagnostics CSV layout") {
  const PhysicalGrid g(16);
  StepperConfig c;
  c.tau = 0.01;
  RunOptions opts;
  opts.sobolev_orders = {2.5, 3.0};
  const auto out = run(taylor_green_family(2, g), c, 0.03, opts);
  std::ostringstream csv;
  write_diagnostics_csv(csv, out.records, "scenario=taylor-green");
  const auto ls = lines(csv.str());
  REQUIRE(ls.size() == 2 + 4);
  CHECK(ls[0] == "# scenario=taylor-green");
  CHECK(ls[1] == "step,time,energy_L2,H1,H2.5,H3,picard_iterations,residual");
  CHECK(ls[2].rfind("0,0,", 0) == 0);
  CHECK(ls[5].rfind("3,0.03,", 0) == 0);
}

TEST_CASE("sweep helpers and validation") {
  const auto h = halving_sequence(0.1, 3);
  REQUIRE(h.size() == 3);
  CHECK(h[2] == 0.025);
  const auto o = observed_orders({0.4, 0.2, 0.1});
  CHECK(o == std::vector<double>{1.0, 1.0});
  CHECK(parse_sweep_axis("resolution") == SweepAxis::Resolution);
  CHECK_THROWS_AS(parse_sweep_axis("space"), ConfigError);

  SweepSpec s;
  s.norms = parse_norm_list("L2");
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.values = {0.1, 0.05, 0.1};
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.values = {0.1, 0.1};
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.values = {0.1, 0.05};
  CHECK_NOTHROW(s.validate());
  s.scenario = "taylor-green";
  s.grid_points = 16;
  s.horizon = 0.1;
  CHECK_THROWS_AS(convergence_sweep(s), ConfigError);
}

TEST_CASE("a one-value sweep has no order estimate") {
  SweepSpec s;
  s.vary = SweepAxis::Tau;
  s.values = {0.05};
  s.grid_points = 16;
  s.horizon = 0.1;
  s.norms = parse_norm_list("L2,Linf");
  const auto t = convergence_sweep(s);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].orders.empty());
  CHECK_FALSE(t.partial);
}

TEST_CASE("tau sweep on a small grid: first order, CSV layout, thread independence") {
  SweepSpec s;
  s.vary = SweepAxis::Tau;
  s.values = halving_sequence(0.1, 3);
  s.fixed.nu = 1e-5;
  s.grid_points = 32;
  s.horizon = 0.5;
  s.norms = parse_norm_list("L2,H1");
  const auto t = convergence_sweep(s);
  REQUIRE(t.rows.size() == 3);
  for (std::size_t i = 1; i < 3; ++i) {
    REQUIRE(t.rows[i].orders.size() == 2);
    CHECK(t.rows[i].orders[0] == Approx(1.0).epsilon(0.1));
  }
  std::ostringstream csv;
  write_table_csv(csv, s, t);
  const auto ls = lines(csv.str());
  REQUIRE(ls.size() == 5);
  CHECK(ls[0].rfind("# sweep vary=tau", 0) == 0);
  CHECK(ls[1] == "tau,L2,H1,order_L2,order_H1");
  CHECK(ls[2].rfind("0.1,", 0) == 0);
  CHECK(ls[2].substr(ls[2].size() - 2) == ",,");

  s.jobs = 3;
  const auto par = convergence_sweep(s);
  REQUIRE(par.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(par.rows[i].errors == t.rows[i].errors);
}

TEST_CASE("resolution sweep computes orders within each grid block") {
  SweepSpec s;
  s.vary = SweepAxis::Resolution;
  s.values = {16, 32};
  s.nu_values = {0.1, 0.05};
  s.fixed.tau = 1e-3;
  s.horizon = 0.01;
  s.norms = parse_norm_list("L2");
  const auto t = convergence_sweep(s);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].grid_points == 16);
  CHECK(t.rows[2].grid_points == 32);
  CHECK(t.rows[0].orders.empty());
  CHECK(t.rows[2].orders.empty());
  CHECK(t.rows[1].orders.size() == 1);
  std::ostringstream csv;
  write_table_csv(csv, s, t);
  CHECK(lines(csv.str())[1] == "grid,nu,L2,order_L2");
}

TEST_CASE("a failing run stops the sweep and flags it partial") {
  SweepSpec s;
  s.vary = SweepAxis::Tau;
  s.values = {0.1, 0.05};
  s.fixed.nu = 0.0;
  s.fixed.max_iterations = 1;
  s.grid_points = 32;
  s.horizon = 1.0;
  s.norms = parse_norm_list("L2");
  const auto t = convergence_sweep(s);
  CHECK(t.partial);
  CHECK(t.rows.empty());
  CHECK(t.failure.find("failed") != std::string::npos);
  std::ostringstream csv;
  write_table_csv(csv, s, t);
  CHECK(csv.str().find("# PARTIAL") != std::string::npos);
}
