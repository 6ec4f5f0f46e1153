#include "nsfourier/stepper.hpp"

#include <cmath>
#include <string>

#include "nsfourier/advection.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/kernels.hpp"
#include "nsfourier/snapshot.hpp"
#include "nsfourier/spectral.hpp"
#include "stepper_detail.hpp"

namespace nsfourier {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::SemiImplicitIterative:
      return "picard";
    case Scheme::SemiImplicitKrylov:
      return "krylov";
    case Scheme::ExplicitGuoZou:
      return "explicit";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "picard" || name == "semi-implicit") return Scheme::SemiImplicitIterative;
  if (name == "krylov") return Scheme::SemiImplicitKrylov;
  if (name == "explicit" || name == "guo-zou") return Scheme::ExplicitGuoZou;
  throw ConfigError("unknown scheme '" + name + "' (expected picard, krylov or explicit)");
}

void StepperConfig::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("tau must be positive");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ConfigError("nu must be >= 0");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (krylov_max_iterations < 1) throw ConfigError("krylov_max_iterations must be >= 1");
}

namespace detail {

SpectralVectorField with_radius(const SpectralVectorField& v, int n) {
  if (v.truncation() == n) return v;
  auto one = [n](const SpectralScalarField& f) {
    const auto c = f.coefficients();
    return SpectralScalarField(f.grid(), n, ComplexBuffer(c.begin(), c.end()));
  };
  return {one(v.u1()), one(v.u2())};
}

int effective_truncation(const StepperConfig& cfg, const SpectralVectorField& u) {
  return cfg.truncation < 0 ? u.truncation() : cfg.truncation;
}

std::vector<double> viscous_weights(const PhysicalGrid& grid, int n, double tau, double nu) {
  const auto& t = grid.tables();
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = t.k_inf[i] <= n ? 1.0 / (1.0 + tau * nu * t.k_sq[i]) : 0.0;
  }
  return w;
}

SpectralVectorField scaled_axpy(const std::vector<double>& w, const SpectralVectorField& x,
                                double alpha, const SpectralVectorField& y) {
  const auto& k = kernels::active();
  auto one = [&](const SpectralScalarField& a, const SpectralScalarField& b) {
    ComplexBuffer out(a.coefficients().size());
    k.scaled_axpy(w.data(), a.coefficients().data(), alpha, b.coefficients().data(), out.data(),
                  out.size());
    return SpectralScalarField(a.grid(), a.truncation(), std::move(out));
  };
  return {one(x.u1(), y.u1()), one(x.u2(), y.u2())};
}

SpectralVectorField step_rhs(const SpectralVectorField& u_n, const StepperConfig& cfg,
                             double t_n) {
  if (!cfg.forcing) return u_n;
  const SpectralVectorField f = with_radius(cfg.forcing(t_n), u_n.truncation());
  return axpy(u_n, cfg.tau, leray_project(f));
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw NumericalError(std::string(what) + ": non-finite state");
}

}  // namespace detail

using namespace detail;

SpectralVectorField implicit_viscous_solve(const SpectralVectorField& rhs, double tau, double nu) {
  const auto w = viscous_weights(rhs.grid(), rhs.truncation(), tau, nu);
  const auto& k = kernels::active();
  auto one = [&](const SpectralScalarField& f) {
    ComplexBuffer out(f.coefficients().size());
    k.scale(w.data(), f.coefficients().data(), out.data(), out.size());
    return SpectralScalarField(f.grid(), f.truncation(), std::move(out));
  };
  return {one(rhs.u1()), one(rhs.u2())};
}

StepResult picard_step(const SpectralVectorField& u_n_in, const StepperConfig& cfg, double t_n) {
  cfg.validate();
  const SpectralVectorField u_n = with_radius(u_n_in, effective_truncation(cfg, u_n_in));
  require_finite(l2_norm(u_n), "picard_step");
  const auto w = viscous_weights(u_n.grid(), u_n.truncation(), cfg.tau, cfg.nu);
  const SpectralVectorField rhs = step_rhs(u_n, cfg, t_n);
  const AdvectionOperator advect(u_n);

  StepResult result{u_n, 0, 0.0, {}};
  for (int m = 1; m <= cfg.max_iterations; ++m) {
    SpectralVectorField next = scaled_axpy(w, rhs, -cfg.tau, advect.apply(result.state));
    const double increment = l2_norm(next - result.state);
    require_finite(increment, "picard_step");
    result.residuals.push_back(increment);
    result.state = std::move(next);
    result.iterations_used = m;
    result.final_residual = increment;
    if (increment < cfg.tolerance) return result;
  }
  throw ConvergenceError("picard_step: no convergence within " +
                             std::to_string(cfg.max_iterations) + " iterations (last increment " +
                             format_double(result.final_residual) +
                             "); tau is too large for the contraction condition",
                         cfg.max_iterations, result.final_residual);
}

StepResult explicit_step(const SpectralVectorField& u_n_in, const StepperConfig& cfg, double t_n) {
  cfg.validate();
  const SpectralVectorField u_n = with_radius(u_n_in, effective_truncation(cfg, u_n_in));
  const auto w = viscous_weights(u_n.grid(), u_n.truncation(), cfg.tau, cfg.nu);
  const SpectralVectorField rhs = step_rhs(u_n, cfg, t_n);
  SpectralVectorField next = scaled_axpy(w, rhs, -cfg.tau, AdvectionOperator(u_n).apply(u_n));
  require_finite(l2_norm(next), "explicit_step");
  return {std::move(next), 1, 0.0, {}};
}

StepResult advance(const SpectralVectorField& u_n, const StepperConfig& cfg, double t_n) {
  switch (cfg.scheme) {
    case Scheme::SemiImplicitIterative:
      return picard_step(u_n, cfg, t_n);
    case Scheme::SemiImplicitKrylov:
      return krylov_step(u_n, cfg, t_n);
    case Scheme::ExplicitGuoZou:
      return explicit_step(u_n, cfg, t_n);
  }
  throw ConfigError("unknown scheme");
}

DiagnosticsRecord make_record(long step, double time, const SpectralVectorField& u,
                              const std::vector<double>& sobolev_orders, int iterations,
                              double residual) {
  DiagnosticsRecord r;
  r.step = step;
  r.time = time;
  r.l2_energy = l2_norm(u);
  r.h1_norm = sobolev_norm(u, 1.0);
  for (double s : sobolev_orders) r.hs_norms[s] = sobolev_norm(u, s);
  r.picard_iterations = iterations;
  r.final_residual = residual;
  return r;
}

long step_count(double horizon, double tau) {
  if (!(horizon > 0.0) || !(tau > 0.0)) throw ConfigError("horizon and tau must be positive");
  const double ratio = horizon / tau;
  const long steps = std::lround(ratio);
  if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9 * std::max(1.0, ratio)) {
    throw ConfigError("horizon T must be a whole multiple of tau (T/tau = " +
                      std::to_string(ratio) + ")");
  }
  return steps;
}

RunOutput run(const SpectralVectorField& u0, const StepperConfig& cfg, double horizon,
              const RunOptions& options) {
  cfg.validate();
  const long steps = step_count(horizon, cfg.tau);
  const int n = cfg.truncation < 0 ? u0.grid().max_truncation() : cfg.truncation;
  if (n > u0.grid().max_truncation()) throw ConfigError("truncation exceeds M/2 - 1");

  SpectralVectorField u = leray_project(with_radius(u0, n));
  RunOutput out{u, {}};
  out.records.reserve(static_cast<std::size_t>(steps) + 1);
  out.records.push_back(make_record(0, 0.0, u, options.sobolev_orders));

  for (long step = 0; step < steps; ++step) {
    const double t_n = static_cast<double>(step) * cfg.tau;
    const double t_next = static_cast<double>(step + 1) * cfg.tau;
    StepResult result = [&] {
      try {
        return advance(u, cfg, t_n);
      } catch (const NumericalError& e) {
        throw StepFailure("step " + std::to_string(step + 1) + " (t = " + format_double(t_next) +
                              "): " + e.what(),
                          step + 1);
      }
    }();
    const StepObservation obs{step + 1, t_next, u, result};
    for (const auto& observer : options.observers) observer(obs);
    out.records.push_back(make_record(step + 1, t_next, result.state, options.sobolev_orders,
                                      result.iterations_used, result.final_residual));
    u = std::move(result.state);
  }
  out.final_state = std::move(u);
  return out;
}

}  // namespace nsfourier
