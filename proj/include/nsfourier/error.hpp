#pragma once

#include <stdexcept>
#include <string>

namespace nsfourier {

/// Bad argument or configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite values, corrupted spectral state or a failed solve (exit code 1).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picard / linear iteration ran out of iterations.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, int iterations, double last_residual)
      : NumericalError(what), iterations_(iterations), last_residual_(last_residual) {}

  int iterations() const { return iterations_; }
  double last_residual() const { return last_residual_; }

 private:
  int iterations_;
  double last_residual_;
};

/// A time step failed inside run(); carries the 1-based index of the failing step.
class StepFailure : public NumericalError {
 public:
  StepFailure(const std::string& what, long step) : NumericalError(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

}  // namespace nsfourier
