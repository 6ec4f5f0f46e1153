#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <span>
#include <vector>

#include "nsfourier/grid.hpp"

namespace nsfourier {

using Complex = std::complex<double>;

/// 64-byte aligned allocator; FFTW plans and the AVX2 kernels both rely on it.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlignment{64};

  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}

  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new(n * sizeof(T), kAlignment));
  }
  void deallocate(T* p, std::size_t) { ::operator delete(p, kAlignment); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
};

using ComplexBuffer = std::vector<Complex, AlignedAllocator<Complex>>;
using RealBuffer = std::vector<double, AlignedAllocator<double>>;

/// Fourier coefficients of a real scalar field on the torus, using
/// f^(k) = integral of f(x) e^{-ik.x} dx, so a constant c has f^(0) = (2pi)^2 c.
/// Modes with |k|_inf > truncation and the Nyquist row/column are always zero.
class SpectralScalarField {
 public:
  SpectralScalarField(PhysicalGrid grid, int truncation);
  SpectralScalarField(PhysicalGrid grid, int truncation, ComplexBuffer coefficients);

  const PhysicalGrid& grid() const { return grid_; }
  int truncation() const { return truncation_; }
  std::span<const Complex> coefficients() const { return coefficients_; }

  /// Coefficient at signed wavenumber (k1, k2); zero outside the stored band.
  Complex coeff(int k1, int k2) const;

  /// max_k |c(k) - conj(c(-k))|.
  double conjugate_symmetry_defect() const;
  double max_abs() const;

 private:
  PhysicalGrid grid_;
  int truncation_;
  ComplexBuffer coefficients_;
};

/// Velocity field as two spectral components sharing grid and truncation.
class SpectralVectorField {
 public:
  SpectralVectorField(SpectralScalarField u1, SpectralScalarField u2);
  static SpectralVectorField zero(const PhysicalGrid& grid, int truncation);

  const SpectralScalarField& u1() const { return u1_; }
  const SpectralScalarField& u2() const { return u2_; }
  const SpectralScalarField& component(int c) const { return c == 0 ? u1_ : u2_; }
  const PhysicalGrid& grid() const { return u1_.grid(); }
  int truncation() const { return u1_.truncation(); }

 private:
  SpectralScalarField u1_;
  SpectralScalarField u2_;
};

/// Grid samples, component-major: value(c, j2, j1) at (x, y) = (j1 h, j2 h).
class PhysicalField {
 public:
  PhysicalField(PhysicalGrid grid, int components);
  PhysicalField(PhysicalGrid grid, int components, std::vector<double> values);

  const PhysicalGrid& grid() const { return grid_; }
  int components() const { return components_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::span<const double> component(int c) const;
  std::span<double> component(int c);

  double& at(int c, int j2, int j1) { return values_[offset(c, j2, j1)]; }
  double at(int c, int j2, int j1) const { return values_[offset(c, j2, j1)]; }

  bool all_finite() const;

 private:
  std::size_t offset(int c, int j2, int j1) const {
    return static_cast<std::size_t>(c) * grid_.size() + grid_.flat(j2, j1);
  }

  PhysicalGrid grid_;
  int components_;
  std::vector<double> values_;
};

// Linear combinations; operands must share grid and truncation.
SpectralScalarField operator+(const SpectralScalarField& a, const SpectralScalarField& b);
SpectralScalarField operator-(const SpectralScalarField& a, const SpectralScalarField& b);
SpectralScalarField operator*(double s, const SpectralScalarField& a);
SpectralVectorField operator+(const SpectralVectorField& a, const SpectralVectorField& b);
SpectralVectorField operator-(const SpectralVectorField& a, const SpectralVectorField& b);
SpectralVectorField operator*(double s, const SpectralVectorField& a);

/// a + s * b, in one pass.
SpectralVectorField axpy(const SpectralVectorField& a, double s, const SpectralVectorField& b);

void require_same_layout(const SpectralScalarField& a, const SpectralScalarField& b);
void require_same_layout(const SpectralVectorField& a, const SpectralVectorField& b);

}  // namespace nsfourier
