#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nsfourier/fields.hpp"
#include "nsfourier/stepper.hpp"

namespace nsfourier {

// Error norms. The default conventions are the ones the published error tables use:
//   "L2"           ||e||_L2
//   "Linf"         sum over components of max_grid |e_i|
//   "H<s>"         ||e||_L2 + ||e||_{Hdot^s}
// and the alternatives:
//   "Linf_max"     max over grid nodes and components of |e_i|
//   "H<s>_fourier" sobolev_norm(e, s), i.e. (2pi)^{-1} (sum (1+|k|^{2s}) |e^|^2)^{1/2}
enum class NormKind { L2, Linf, LinfMax, Sobolev, SobolevFourier };

struct NormSpec {
  NormKind kind = NormKind::L2;
  double s = 0.0;
  std::string label;
};

NormSpec parse_norm(const std::string& token);
/// Comma-separated list, e.g. "L2,Linf,H1,H6".
std::vector<NormSpec> parse_norm_list(const std::string& list);
/// One-line description of the conventions, written into CSV metadata.
std::string norm_conventions_note();

using NormValues = std::vector<std::pair<std::string, double>>;

NormValues error_norms(const SpectralVectorField& u, const SpectralVectorField& exact,
                       const std::vector<NormSpec>& norms);
double error_norm(const SpectralVectorField& u, const SpectralVectorField& exact,
                  const NormSpec& norm);

// ---- monitors --------------------------------------------------------------

struct EnergyViolation {
  long step;
  double previous;
  double current;
};

struct EnergyReport {
  bool enabled = true;
  std::vector<EnergyViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Steps with ||u^{n+1}||_L2 > ||u^n||_L2 + tolerance. Disabled (empty) for forced runs.
EnergyReport energy_monitor(const std::vector<DiagnosticsRecord>& records, bool forced,
                            double tolerance = 1e-12);

/// Observer checking ||grad u^{n+1}||^2 + ||grad(u^{n+1} - u^n)||^2 <= ||grad u^n||^2 + tol.
class H1DissipationMonitor {
 public:
  explicit H1DissipationMonitor(double tolerance = 1e-10) : tolerance_(tolerance) {}

  void observe(const StepObservation& obs);
  Observer observer();

  /// Largest value of lhs - rhs seen.
  double worst_excess() const { return worst_excess_; }
  const std::vector<long>& violations() const { return violations_; }
  long steps_seen() const { return steps_; }

 private:
  double tolerance_;
  double worst_excess_ = -1e300;
  long steps_ = 0;
  std::vector<long> violations_;
};

/// sup_n ||u^n||_{H^s} over a run, with the bound factor relative to step 0.
double max_growth_factor(const std::vector<DiagnosticsRecord>& records, double s);

/// ||w^{(m+1)}|| / ||w^{(m)}|| from a Picard residual history.
std::vector<double> increment_ratios(const std::vector<double>& residuals);

/// w = dx u2 - dy u1 on the grid.
PhysicalField vorticity_snapshot(const SpectralVectorField& u);

}  // namespace nsfourier
