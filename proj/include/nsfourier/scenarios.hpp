#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nsfourier/fields.hpp"
#include "nsfourier/stepper.hpp"

namespace nsfourier {

/// Named initial condition, with exact solution and forcing when the scenario has them.
struct Scenario {
  std::string name;
  PhysicalGrid grid;
  SpectralVectorField initial_velocity;
  std::function<SpectralVectorField(double t)> exact_solution;  // empty if none
  ForcingFn forcing;                                            // empty if unforced
};

/// u0 = (-(m/2) cos^m x cos^{m-1} y sin y, (m/2) cos^{m-1} x cos^m y sin x).
SpectralVectorField taylor_green_family(int m, const PhysicalGrid& grid);

inline constexpr double kDefaultShearWidth = 3.14159265358979323846 / 15.0;

/// Double shear layer vorticity, evaluated with (x, y) mapped to (-pi, pi].
SpectralScalarField double_shear_vorticity(double rho0, const PhysicalGrid& grid);

/// Two Gaussian vortices centred at (+-pi/4, 0), coordinates on (-pi, pi].
SpectralScalarField gaussian_vortices_vorticity(const PhysicalGrid& grid);

/// u^ = -i k_perp w^ / |k|^2 with k_perp = (-k2, k1); the mean of w is dropped.
SpectralVectorField velocity_from_vorticity(const SpectralScalarField& w);

/// u_e(t) = 0.5 e^{-t} (-sin x cos y, cos x sin y), sampled and transformed.
SpectralVectorField manufactured_velocity(double t, const PhysicalGrid& grid);

enum class ForcingMode { EulerForcing };

/// f_e = d_t u_e + P(u_e . grad u_e) evaluated spectrally (d_t u_e = -u_e analytically).
SpectralVectorField manufactured_forcing(double t, ForcingMode mode, const PhysicalGrid& grid);

/// manufactured_forcing with the time dependence factored out:
/// f_e(t) = -e^{-t} U + e^{-2t} C, U = u_e(0), C = P Pi_N(U . grad U), computed once.
class ManufacturedForcing {
 public:
  explicit ManufacturedForcing(const PhysicalGrid& grid);
  SpectralVectorField operator()(double t) const;

 private:
  SpectralVectorField base_;
  SpectralVectorField convection_;
};

struct ScenarioParams {
  int taylor_green_m = 2;
  double shear_width = kDefaultShearWidth;
};

/// "taylor-green", "double-shear", "gaussian-vortices", "manufactured".
Scenario make_scenario(const std::string& name, const PhysicalGrid& grid,
                       const ScenarioParams& params = {});

/// Maps a grid node in [0, 2pi) to (-pi, pi].
double centered_coordinate(double x);

}  // namespace nsfourier
