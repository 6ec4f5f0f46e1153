#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsfourier/diagnostics.hpp"
#include "nsfourier/scenarios.hpp"
#include "nsfourier/stepper.hpp"

namespace nsfourier {

enum class SweepAxis { Tau, Nu, Resolution };

SweepAxis parse_sweep_axis(const std::string& name);
std::string to_string(SweepAxis axis);

/// base / 2^k for k = 0 .. count - 1.
std::vector<double> halving_sequence(double base, int count);

struct SweepSpec {
  SweepAxis vary = SweepAxis::Tau;
  /// tau or nu values, or grid sizes for a resolution sweep.
  std::vector<double> values;
  /// Resolution sweeps: viscosities run on every grid (empty: fixed.nu only).
  std::vector<double> nu_values;
  StepperConfig fixed;
  int grid_points = 128;
  double horizon = 1.0;
  std::vector<NormSpec> norms;
  std::string scenario = "manufactured";
  ScenarioParams scenario_params;
  int jobs = 1;

  void validate() const;
};

struct SweepRow {
  int grid_points = 0;
  double tau = 0.0;
  double nu = 0.0;
  NormValues errors;
  /// log2(e_prev / e_this) per norm; empty for the first row of a block.
  std::vector<double> orders;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  bool partial = false;
  std::string failure;
};

/// log2(e_k / e_{k+1}) for consecutive entries.
std::vector<double> observed_orders(const std::vector<double>& errors);

/// Runs the forced scheme for every value and measures errors at t = horizon.
/// The first failing run stops the sweep; rows so far are kept and the table is flagged partial.
SweepTable convergence_sweep(const SweepSpec& spec);

/// Comment line with the configuration, then the header and one row per run.
void write_table_csv(std::ostream& out, const SweepSpec& spec, const SweepTable& table);
/// Aligned text rendering for the terminal.
void print_table(std::ostream& out, const SweepSpec& spec, const SweepTable& table);

}  // namespace nsfourier
