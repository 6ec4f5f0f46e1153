#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsfourier/diagnostics.hpp"
#include "nsfourier/scenarios.hpp"
#include "nsfourier/stepper.hpp"

namespace nsfourier::harness {

/// Flat `key = value` text; blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> read_config(const std::filesystem::path& path);

/// Everything that determines a simulate run. Keys in to_text() are the flag names,
/// so a written manifest can be fed back with --config.
struct RunManifest {
  std::string scenario;
  ScenarioParams params;
  int grid_points = 128;
  StepperConfig stepper;
  double horizon = 1.0;
  std::filesystem::path out_dir = "run";
  int snapshots = 10;
  /// Steps between snapshots; 0 derives it from `snapshots`.
  long cadence = 0;
  std::string norms = "H2.5,H3";
  std::uint64_t seed = 0;
  std::string simd = "auto";

  void validate() const;
  /// Effective cadence for a run of `steps` steps.
  long snapshot_cadence(long steps) const;
  std::string to_text() const;
};

struct SimulateSummary {
  long steps = 0;
  EnergyReport energy;
  NormValues final_errors;  // empty without an exact solution
  std::vector<std::filesystem::path> files;
};

/// Runs the manifest and writes diagnostics.csv, manifest.txt and the snapshots.
/// Throws ConfigError / NumericalError (StepFailure for a failing step).
SimulateSummary simulate(const RunManifest& manifest, std::ostream& log);

struct CheckOptions {
  std::optional<double> tau;
  std::optional<double> nu;
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckInfo {
  std::string name;
  std::string description;
};

const std::vector<CheckInfo>& available_checks();
/// Throws ConfigError for an unknown name; numerical failures are reported as failed checks.
CheckResult run_check(const std::string& name, const CheckOptions& options);

/// `nsfourier <simulate|converge|verify> ...`; returns the process exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nsfourier::harness
