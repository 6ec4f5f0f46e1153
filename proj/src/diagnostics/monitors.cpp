#include <algorithm>
#include <cmath>

#include "nsfourier/diagnostics.hpp"
#include "nsfourier/spectral.hpp"

namespace nsfourier {

EnergyReport energy_monitor(const std::vector<DiagnosticsRecord>& records, bool forced,
                            double tolerance) {
  EnergyReport report;
  if (forced) {
    report.enabled = false;
    return report;
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double prev = records[i - 1].l2_energy;
    const double cur = records[i].l2_energy;
    if (!(cur <= prev + tolerance)) report.violations.push_back({records[i].step, prev, cur});
  }
  return report;
}

namespace {

double grad_sq(const SpectralVectorField& v) {
  const double g = sobolev_seminorm(v, 1.0);
  return g * g;
}

}  // namespace

void H1DissipationMonitor::observe(const StepObservation& obs) {
  const SpectralVectorField& next = obs.result.state;
  const double lhs = grad_sq(next) + grad_sq(next - obs.previous);
  const double excess = lhs - grad_sq(obs.previous);
  worst_excess_ = std::max(worst_excess_, excess);
  ++steps_;
  if (!(excess <= tolerance_)) violations_.push_back(obs.step);
}

Observer H1DissipationMonitor::observer() {
  return [this](const StepObservation& obs) { observe(obs); };
}

double max_growth_factor(const std::vector<DiagnosticsRecord>& records, double s) {
  if (records.empty()) return 0.0;
  const auto initial = records.front().hs_norms.find(s);
  if (initial == records.front().hs_norms.end() || initial->second == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& r : records) worst = std::max(worst, r.hs_norms.at(s));
  return worst / initial->second;
}

std::vector<double> increment_ratios(const std::vector<double>& residuals) {
  std::vector<double> out;
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    out.push_back(residuals[i - 1] > 0.0 ? residuals[i] / residuals[i - 1] : 0.0);
  }
  return out;
}

PhysicalField vorticity_snapshot(const SpectralVectorField& u) { return inverse_transform(curl(u)); }

}  // namespace nsfourier
