#pragma once

#include "nsfourier/fields.hpp"

namespace nsfourier {

// ---- transforms -----------------------------------------------------------

/// Transform one component of f. The result is truncated to `truncation`
/// (default M/2 - 1), Nyquist-free and exactly conjugate symmetric.
/// Throws NumericalError if f contains NaN/Inf.
SpectralScalarField forward_transform(const PhysicalField& f, int component = 0);
SpectralScalarField forward_transform(const PhysicalField& f, int component, int truncation);
/// Both components of a two-component field, one packed FFT.
SpectralVectorField forward_transform_vector(const PhysicalField& f);
SpectralVectorField forward_transform_vector(const PhysicalField& f, int truncation);

/// Grid samples of F. Throws NumericalError if F is not conjugate symmetric
/// to 1e-10 relative; the residual imaginary part below that is discarded.
PhysicalField inverse_transform(const SpectralScalarField& F);
PhysicalField inverse_transform(const SpectralVectorField& v);

// ---- Fourier multipliers --------------------------------------------------

/// Pi_N: zero every mode with |k|_inf > n. Requires 0 <= n <= M/2 - 1.
SpectralScalarField truncate(const SpectralScalarField& F, int n);
SpectralVectorField truncate(const SpectralVectorField& v, int n);

/// d^order/dx_axis^order, axis in {1, 2}.
SpectralScalarField spectral_derivative(const SpectralScalarField& F, int axis, int order = 1);
SpectralScalarField laplacian(const SpectralScalarField& F);

/// Lambda^s = (-Lap)^{s/2}: multiply by |k|^s, the k = 0 mode by 0. s >= 0.
SpectralScalarField fractional_lambda(const SpectralScalarField& F, double s);

/// Leray projection v - k (k.v)/|k|^2; the mean mode passes through.
SpectralVectorField leray_project(const SpectralVectorField& v);

/// max_k |k1 v1(k) + k2 v2(k)|
double max_divergence(const SpectralVectorField& v);

/// Scalar curl dx v2 - dy v1.
SpectralScalarField curl(const SpectralVectorField& v);

// ---- norms and inner products ---------------------------------------------

/// (2pi)^{-1} (sum (1 + |k|^{2s}) |F(k)|^2)^{1/2}; s = 0 gives the L2 norm.
/// Vector fields add component sums before the square root.
double sobolev_norm(const SpectralScalarField& F, double s);
double sobolev_norm(const SpectralVectorField& v, double s);

/// Homogeneous seminorm (2pi)^{-1} (sum |k|^{2s} |F(k)|^2)^{1/2}.
double sobolev_seminorm(const SpectralScalarField& F, double s);
double sobolev_seminorm(const SpectralVectorField& v, double s);

double l2_norm(const SpectralScalarField& F);
double l2_norm(const SpectralVectorField& v);

/// L2(T^2) inner product, (2pi)^{-2} sum Re(conj(F) G).
double inner_product(const SpectralScalarField& f, const SpectralScalarField& g);
double inner_product(const SpectralVectorField& f, const SpectralVectorField& g);

// ---- nonlinearity ----------------------------------------------------------

/// Pi_N P(a . grad b), alias free (3/2-rule padding), N = b.truncation().
SpectralVectorField convective_term(const SpectralVectorField& a, const SpectralVectorField& b);

}  // namespace nsfourier
