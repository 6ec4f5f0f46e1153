#pragma once

#include <random>

#include "nsfourier/fields.hpp"

namespace nsfourier {

/// Random real field with modes |k|_inf <= band and amplitudes ~ (1 + |k|^2)^{-decay/2}.
/// Conjugate symmetric by construction; the mean mode is kept unless zero_mean.
SpectralScalarField random_scalar_field(const PhysicalGrid& grid, int truncation, int band,
                                        std::mt19937_64& rng, double decay = 1.0,
                                        bool zero_mean = false);

SpectralVectorField random_vector_field(const PhysicalGrid& grid, int truncation, int band,
                                        std::mt19937_64& rng, double decay = 1.0);

/// Leray-projected, mean-free random field scaled to unit H^s norm.
SpectralVectorField random_divergence_free_field(const PhysicalGrid& grid, int truncation,
                                                 int band, std::mt19937_64& rng, double s = 3.0,
                                                 double decay = 1.0);

}  // namespace nsfourier
