#include "nsfourier/random_fields.hpp"

#include <cmath>

#include "nsfourier/spectral.hpp"

namespace nsfourier {

SpectralScalarField random_scalar_field(const PhysicalGrid& grid, int truncation, int band,
                                        std::mt19937_64& rng, double decay, bool zero_mean) {
  std::normal_distribution<double> normal;
  const auto& t = grid.tables();
  ComplexBuffer raw(grid.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    if (t.k_inf[i] > band) continue;
    raw[i] = std::pow(1.0 + t.k_sq[i], -0.5 * decay) * Complex{re, im};
  }
  ComplexBuffer c(raw.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (raw[i] + std::conj(raw[t.mirror[i]]));
  if (zero_mean) c[0] = Complex{};
  // unit-order physical amplitudes under the (2pi)^2 coefficient convention
  for (auto& z : c) z *= kTwoPi * kTwoPi;
  return {grid, truncation, std::move(c)};
}

SpectralVectorField random_vector_field(const PhysicalGrid& grid, int truncation, int band,
                                        std::mt19937_64& rng, double decay) {
  auto a = random_scalar_field(grid, truncation, band, rng, decay);
  auto b = random_scalar_field(grid, truncation, band, rng, decay);
  return {std::move(a), std::move(b)};
}

SpectralVectorField random_divergence_free_field(const PhysicalGrid& grid, int truncation,
                                                 int band, std::mt19937_64& rng, double s,
                                                 double decay) {
  auto a = random_scalar_field(grid, truncation, band, rng, decay, true);
  auto b = random_scalar_field(grid, truncation, band, rng, decay, true);
  const auto v = leray_project(SpectralVectorField(std::move(a), std::move(b)));
  return (1.0 / sobolev_norm(v, s)) * v;
}

}  // namespace nsfourier
