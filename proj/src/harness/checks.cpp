#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "nsfourier/advection.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/harness.hpp"
#include "nsfourier/kernels.hpp"
#include "nsfourier/random_fields.hpp"
#include "nsfourier/snapshot.hpp"
#include "nsfourier/spectral.hpp"

namespace nsfourier::harness {

namespace {

constexpr int kTrials = 20;
constexpr double kTight = 1e-12;
// Low-mode random states: unit H^3 then means O(0.1) velocities.
constexpr int kContractionBand = 4;

// Largest relative deviation seen across trials, reported against a threshold.
struct Worst {
  double value = 0.0;
  void see(double v) { value = std::max(value, std::isfinite(v) ? v : INFINITY); }
};

double max_abs_diff(const SpectralScalarField& a, const SpectralScalarField& b) {
  const auto x = a.coefficients();
  const auto y = b.coefficients();
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double max_abs_diff(const SpectralVectorField& a, const SpectralVectorField& b) {
  return std::max(max_abs_diff(a.u1(), b.u1()), max_abs_diff(a.u2(), b.u2()));
}

double max_abs(const SpectralVectorField& v) { return std::max(v.u1().max_abs(), v.u2().max_abs()); }

CheckResult verdict(const std::string& name, const std::vector<std::pair<std::string, double>>& worst,
                    double threshold) {
  CheckResult r{name, true, {}};
  std::ostringstream d;
  for (const auto& [what, v] : worst) {
    d << (d.tellp() > 0 ? ", " : "") << what << ' ' << v;
    if (!(v <= threshold)) r.passed = false;
  }
  d << " (threshold " << threshold << ')';
  r.detail = d.str();
  return r;
}

CheckResult check_roundtrip(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed);
  Worst w;
  for (int t = 0; t < kTrials; ++t) {
    const PhysicalGrid g(t % 2 ? 32 : 24);
    const auto F = random_scalar_field(g, g.max_truncation(), g.max_truncation(), rng);
    w.see(max_abs_diff(forward_transform(inverse_transform(F)), F) / F.max_abs());
  }
  return verdict("roundtrip", {{"max relative coefficient error", w.value}}, kTight);
}

CheckResult check_parseval(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed + 1);
  Worst w;
  for (int t = 0; t < kTrials; ++t) {
    const PhysicalGrid g(32);
    const auto F = random_scalar_field(g, 15, 15, rng);
    const auto f = inverse_transform(F);
    double sum = 0.0;
    for (double v : f.values()) sum += v * v;
    const double grid_norm = std::sqrt(sum) * g.spacing();
    w.see(std::abs(grid_norm - l2_norm(F)) / l2_norm(F));
  }
  return verdict("parseval", {{"max relative norm mismatch", w.value}}, kTight);
}

CheckResult check_truncation(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed + 2);
  Worst idem, adj;
  for (int t = 0; t < kTrials; ++t) {
    const PhysicalGrid g(32);
    const int n = 3 + t % 10;
    const auto f = random_scalar_field(g, 15, 15, rng);
    const auto h = random_scalar_field(g, 15, 15, rng);
    const auto pf = truncate(f, n);
    idem.see(max_abs_diff(truncate(pf, n), pf) / f.max_abs());
    const double scale = l2_norm(f) * l2_norm(h);
    adj.see(std::abs(inner_product(pf, h) - inner_product(f, truncate(h, n))) / scale);
  }
  return verdict("truncation", {{"idempotence", idem.value}, {"self-adjointness", adj.value}}, kTight);
}

CheckResult check_projection(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed + 3);
  Worst idem, div, grad;
  for (int t = 0; t < kTrials; ++t) {
    const PhysicalGrid g(32);
    const auto v = random_vector_field(g, 15, 15, rng);
    const auto pv = leray_project(v);
    idem.see(max_abs_diff(leray_project(pv), pv) / max_abs(v));
    div.see(max_divergence(pv) / max_abs(v));
    const auto phi = random_scalar_field(g, 15, 15, rng);
    const SpectralVectorField gradient(spectral_derivative(phi, 1), spectral_derivative(phi, 2));
    const auto pg = leray_project(gradient);
    grad.see(std::max(pg.u1().max_abs(), pg.u2().max_abs()) / max_abs(gradient));
  }
  return verdict("projection",
                 {{"idempotence", idem.value}, {"divergence", div.value}, {"gradient residue", grad.value}},
                 kTight);
}

CheckResult check_orthogonality(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed + 4);
  Worst w;
  for (int t = 0; t < kTrials; ++t) {
    const PhysicalGrid g(t % 2 ? 32 : 16);
    const int n = g.max_truncation();
    const auto a = random_divergence_free_field(g, n, n, rng);
    const auto b = random_divergence_free_field(g, n, n, rng);
    const auto c = convective_term(a, b);
    w.see(std::abs(inner_product(c, b)) / (l2_norm(c) * l2_norm(b)));
  }
  return verdict("orthogonality", {{"max |<Pi_N P(a.grad b), b>| / (|conv| |b|)", w.value}}, kTight);
}

CheckResult check_contraction(const CheckOptions& o) {
  const PhysicalGrid g(64);
  const int n = g.max_truncation();
  StepperConfig cfg;
  cfg.nu = o.nu.value_or(1e-2);
  cfg.tau = o.tau.value_or(std::min(0.01 * cfg.nu, 0.1 / n));
  std::mt19937_64 rng(o.seed + 5);
  double worst = 0.0;
  int max_iter = 0;
  for (int t = 0; t < 10; ++t) {
    const auto u = random_divergence_free_field(g, n, kContractionBand, rng);
    StepResult r = [&] {
      try {
        return picard_step(u, cfg, 0.0);
      } catch (const NumericalError& e) {
        throw NumericalError("state " + std::to_string(t) + " with tau=" + format_double(cfg.tau) +
                             " nu=" + format_double(cfg.nu) + ": " + e.what());
      }
    }();
    max_iter = std::max(max_iter, r.iterations_used);
    for (double q : increment_ratios(r.residuals)) worst = std::max(worst, q);
  }
  CheckResult res = verdict("contraction", {{"max increment ratio", worst}}, 0.5);
  res.detail += "; tau=" + format_double(cfg.tau) + " nu=" + format_double(cfg.nu) +
                ", at most " + std::to_string(max_iter) + " iterations";
  return res;
}

CheckResult check_energy(const CheckOptions&) {
  const PhysicalGrid g(32);
  long violations = 0;
  std::ostringstream d;
  for (double tau : {1e-2, 1e-1, 1.0}) {
    StepperConfig cfg;
    cfg.tau = tau;
    cfg.nu = 1e-4;
    cfg.scheme = Scheme::SemiImplicitKrylov;
    RunOptions opts;
    opts.sobolev_orders.clear();
    const auto out = run(taylor_green_family(2, g), cfg, 20 * tau, opts);
    const auto rep = energy_monitor(out.records, false);
    violations += static_cast<long>(rep.violations.size());
  }
  d << violations << " energy increase(s) over 3 x 20 unforced steps";
  return {"energy", violations == 0, d.str()};
}

CheckResult check_dissipation(const CheckOptions&) {
  const PhysicalGrid g(32);
  StepperConfig cfg;
  cfg.tau = 1e-4;
  cfg.nu = 0.1;
  H1DissipationMonitor monitor;
  RunOptions opts;
  opts.sobolev_orders.clear();
  opts.observers.push_back(monitor.observer());
  run(taylor_green_family(2, g), cfg, 100 * cfg.tau, opts);
  std::ostringstream d;
  d << monitor.violations().size() << " violation(s) in " << monitor.steps_seen()
    << " steps, worst excess " << monitor.worst_excess();
  return {"dissipation", monitor.violations().empty() && monitor.steps_seen() == 100, d.str()};
}

CheckResult check_forcing(const CheckOptions&) {
  const PhysicalGrid g(64);
  Worst w;
  for (double t : {0.0, 0.5, 1.0}) {
    const auto f = manufactured_forcing(t, ForcingMode::EulerForcing, g);
    w.see(l2_norm(f + manufactured_velocity(t, g)));
  }
  return verdict("forcing", {{"max ||f_e + u_e||_L2", w.value}}, 1e-10);
}

CheckResult check_kernels(const CheckOptions& o) {
  const kernels::KernelTable* simd = kernels::avx2_table();
  if (simd == nullptr) return {"kernels", true, "no SIMD variant on this CPU; scalar only"};
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(o.seed + 6);
  std::normal_distribution<double> normal;
  bool identical = true;
  double red = 0.0;
  for (std::size_t n : {1u, 3u, 7u, 64u, 1023u}) {
    RealBuffer w(n), k(n), kk(n), inv(n);
    ComplexBuffer x(n), y(n), z(n), a(n), o1(n), o2(n), p1(n), p2(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = normal(rng);
      k[i] = normal(rng);
      kk[i] = normal(rng);
      inv[i] = normal(rng);
      x[i] = {normal(rng), normal(rng)};
      y[i] = {normal(rng), normal(rng)};
      z[i] = {normal(rng), normal(rng)};
      a[i] = {normal(rng), normal(rng)};
    }
    auto same = [&](const ComplexBuffer& u, const ComplexBuffer& v) {
      return std::equal(u.begin(), u.end(), v.begin());
    };
    ref.scale(w.data(), x.data(), o1.data(), n);
    simd->scale(w.data(), x.data(), p1.data(), n);
    identical &= same(o1, p1);
    ref.scaled_axpy(w.data(), x.data(), 0.37, y.data(), o1.data(), n);
    simd->scaled_axpy(w.data(), x.data(), 0.37, y.data(), p1.data(), n);
    identical &= same(o1, p1);
    ref.mul_ik(k.data(), x.data(), o1.data(), n);
    simd->mul_ik(k.data(), x.data(), p1.data(), n);
    identical &= same(o1, p1);
    ref.advect_pack(a.data(), x.data(), y.data(), o1.data(), n);
    simd->advect_pack(a.data(), x.data(), y.data(), p1.data(), n);
    identical &= same(o1, p1);
    ref.leray(k.data(), kk.data(), inv.data(), x.data(), y.data(), o1.data(), o2.data(), n);
    simd->leray(k.data(), kk.data(), inv.data(), x.data(), y.data(), p1.data(), p2.data(), n);
    identical &= same(o1, p1) && same(o2, p2);
    const double r1 = ref.weighted_norm2(w.data(), x.data(), n);
    const double s1 = simd->weighted_norm2(w.data(), x.data(), n);
    const double r2 = ref.weighted_dot(w.data(), x.data(), y.data(), n);
    const double s2 = simd->weighted_dot(w.data(), x.data(), y.data(), n);
    red = std::max({red, std::abs(r1 - s1) / (1.0 + std::abs(r1)), std::abs(r2 - s2) / (1.0 + std::abs(r2))});
  }
  std::ostringstream d;
  d << simd->name << " vs scalar: elementwise " << (identical ? "bit-identical" : "DIFFERENT")
    << ", reductions max relative difference " << red;
  return {"kernels", identical && red <= kTight, d.str()};
}

using CheckFn = CheckResult (*)(const CheckOptions&);

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"roundtrip", "forward(inverse(F)) = F on random fields"}, check_roundtrip},
      {{"parseval", "grid L2 norm equals spectral L2 norm"}, check_parseval},
      {{"truncation", "Pi_N idempotent and self-adjoint"}, check_truncation},
      {{"projection", "Leray projection idempotent, divergence free, kills gradients"}, check_projection},
      {{"orthogonality", "<Pi_N P(a.grad b), b> = 0 for divergence-free a, b"}, check_orthogonality},
      {{"contraction", "Picard increments shrink by <= 1/2 (uses --tau, --nu)"}, check_contraction},
      {{"energy", "unforced L2 energy never increases, tau up to 1"}, check_energy},
      {{"dissipation", "H1 dissipation inequality at nu=0.1, tau=1e-4"}, check_dissipation},
      {{"forcing", "manufactured forcing satisfies f_e + u_e = 0"}, check_forcing},
      {{"kernels", "SIMD kernels match the scalar reference"}, check_kernels},
  };
  return entries;
}

}  // namespace

const std::vector<CheckInfo>& available_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CheckResult run_check(const std::string& name, const CheckOptions& options) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    try {
      return e.fn(options);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& ex) {
      return {name, false, ex.what()};
    }
  }
  throw ConfigError("unknown check '" + name + "' (see --list)");
}

}  // namespace nsfourier::harness
