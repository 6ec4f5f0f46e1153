#pragma once

#include <vector>

#include "nsfourier/stepper.hpp"

namespace nsfourier::detail {

SpectralVectorField with_radius(const SpectralVectorField& v, int n);
int effective_truncation(const StepperConfig& cfg, const SpectralVectorField& u);
/// 1/(1 + tau nu |k|^2) inside |k|_inf <= n, 0 outside.
std::vector<double> viscous_weights(const PhysicalGrid& grid, int n, double tau, double nu);
/// w * (x + alpha y), componentwise.
SpectralVectorField scaled_axpy(const std::vector<double>& w, const SpectralVectorField& x,
                                double alpha, const SpectralVectorField& y);
/// u_n + tau P Pi_N f(t_n), or u_n when unforced.
SpectralVectorField step_rhs(const SpectralVectorField& u_n, const StepperConfig& cfg, double t_n);
void require_finite(double value, const char* what);

}  // namespace nsfourier::detail
