#pragma once

#include <vector>

#include "nsfourier/fields.hpp"

namespace nsfourier {

/// The operator b -> Pi_N P(a . grad b) for a fixed transporting field a.
/// The padded physical samples of a are computed once, so repeated
/// applications (Picard sweeps, Krylov matvecs) cost two inverse and one
/// forward FFT on the 3M/2 grid each.
class AdvectionOperator {
 public:
  explicit AdvectionOperator(const SpectralVectorField& a);

  int padded_points() const { return padded_; }

  /// Pi_N P(a . grad b) with N = b.truncation().
  SpectralVectorField apply(const SpectralVectorField& b) const;
  /// Pi_N (a . grad b) without the projection.
  SpectralVectorField apply_unprojected(const SpectralVectorField& b) const;

 private:
  PhysicalGrid grid_;
  int padded_;
  std::vector<std::size_t> pad_map_;  // M-grid flat index -> padded flat index
  ComplexBuffer a_packed_;  // a1 + i a2 on the padded grid
};

}  // namespace nsfourier
