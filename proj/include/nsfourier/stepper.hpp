#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsfourier/fields.hpp"

namespace nsfourier {

enum class Scheme {
  /// Semi-implicit scheme solved by Picard (fixed-point) iteration.
  SemiImplicitIterative,
  /// Same semi-implicit linear system, solved by conjugate gradients on the
  /// normal equations. Converges for every tau.
  SemiImplicitKrylov,
  /// Nonlinearity fully explicit, viscosity implicit.
  ExplicitGuoZou,
};

std::string to_string(Scheme s);
/// "picard" | "krylov" | "explicit"
Scheme parse_scheme(const std::string& name);

/// Forcing f(t); the stepper projects and truncates it before use.
using ForcingFn = std::function<SpectralVectorField(double t)>;

struct StepperConfig {
  double tau = 0.01;
  double nu = 0.0;
  int truncation = -1;  // -1: M/2 - 1 of the state's grid
  double tolerance = 1e-10;
  int max_iterations = 200;
  int krylov_max_iterations = 20000;
  Scheme scheme = Scheme::SemiImplicitIterative;
  ForcingFn forcing;

  void validate() const;
};

struct StepResult {
  SpectralVectorField state;
  int iterations_used = 0;
  double final_residual = 0.0;
  /// Picard: ||u^(m+1) - u^(m)||_L2 per iteration; Krylov: true residual per restart.
  std::vector<double> residuals;
};

/// (I - tau nu Lap)^{-1}: each coefficient times 1/(1 + tau nu |k|^2).
SpectralVectorField implicit_viscous_solve(const SpectralVectorField& rhs, double tau, double nu);

StepResult picard_step(const SpectralVectorField& u_n, const StepperConfig& cfg, double t_n);
StepResult krylov_step(const SpectralVectorField& u_n, const StepperConfig& cfg, double t_n);
StepResult explicit_step(const SpectralVectorField& u_n, const StepperConfig& cfg, double t_n);
/// Dispatch on cfg.scheme.
StepResult advance(const SpectralVectorField& u_n, const StepperConfig& cfg, double t_n);

/// Per-step record of the quantities the monitors and CSV writers use.
struct DiagnosticsRecord {
  long step = 0;
  double time = 0.0;
  double l2_energy = 0.0;
  double h1_norm = 0.0;
  std::map<double, double> hs_norms;
  int picard_iterations = 0;
  double final_residual = 0.0;
  std::optional<std::map<std::string, double>> errors;
};

DiagnosticsRecord make_record(long step, double time, const SpectralVectorField& u,
                              const std::vector<double>& sobolev_orders, int iterations = 0,
                              double residual = 0.0);

struct StepObservation {
  long step;  // index of the new state (1-based)
  double time;
  const SpectralVectorField& previous;
  const StepResult& result;
};

using Observer = std::function<void(const StepObservation&)>;

struct RunOptions {
  std::vector<double> sobolev_orders{2.5, 3.0};
  std::vector<Observer> observers;
};

struct RunOutput {
  SpectralVectorField final_state;
  std::vector<DiagnosticsRecord> records;  // step 0 .. steps
};

/// Number of steps T/tau; throws ConfigError unless T is a whole multiple of tau.
long step_count(double horizon, double tau);

/// Project u0 (Pi_N then Leray), then advance T/tau steps.
/// A failing step is rethrown as StepFailure carrying its index.
RunOutput run(const SpectralVectorField& u0, const StepperConfig& cfg, double horizon,
              const RunOptions& options = {});

}  // namespace nsfourier
