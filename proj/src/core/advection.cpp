#include "nsfourier/advection.hpp"

#include "nsfourier/error.hpp"
#include "nsfourier/fft.hpp"
#include "nsfourier/kernels.hpp"
#include "nsfourier/spectral.hpp"

namespace nsfourier {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInverseScale = 1.0 / (kTwoPi * kTwoPi);

int padded_size(int m) { return 3 * m / 2; }

std::vector<std::size_t> padded_indices(const PhysicalGrid& grid, int p) {
  const auto& t = grid.tables();
  std::vector<std::size_t> map(grid.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const int k1 = static_cast<int>(t.k1[i]);
    const int k2 = static_cast<int>(t.k2[i]);
    const int i1 = ((k1 % p) + p) % p;
    const int i2 = ((k2 % p) + p) % p;
    map[i] = static_cast<std::size_t>(i2) * p + i1;
  }
  return map;
}

/// Zero-pad packed coefficients (Nyquist excluded) and return physical samples
/// on the p x p grid.
ComplexBuffer to_padded_physical(const PhysicalGrid& grid, int p,
                                 const std::vector<std::size_t>& pad_map,
                                 const ComplexBuffer& packed) {
  ComplexBuffer spec(static_cast<std::size_t>(p) * p);
  const auto& k_inf = grid.tables().k_inf;
  const int limit = grid.max_truncation();
  for (std::size_t i = 0; i < packed.size(); ++i) {
    if (k_inf[i] <= limit) spec[pad_map[i]] = packed[i];
  }
  ComplexBuffer phys(spec.size());
  fft::backward(p, spec.data(), phys.data());
  for (auto& z : phys) z *= kInverseScale;
  return phys;
}

/// dx f + i dy f, packed, in coefficient space.
ComplexBuffer packed_gradient(const SpectralScalarField& f) {
  const auto& t = f.grid().tables();
  const auto& k = kernels::active();
  const std::size_t n = f.coefficients().size();
  ComplexBuffer dx(n);
  ComplexBuffer dy(n);
  k.mul_ik(t.k1.data(), f.coefficients().data(), dx.data(), n);
  k.mul_ik(t.k2.data(), f.coefficients().data(), dy.data(), n);
  for (std::size_t i = 0; i < n; ++i) dx[i] += kI * dy[i];
  return dx;
}

}  // namespace

AdvectionOperator::AdvectionOperator(const SpectralVectorField& a)
    : grid_(a.grid()),
      padded_(padded_size(a.grid().points())),
      pad_map_(padded_indices(grid_, padded_)) {
  const auto c1 = a.u1().coefficients();
  const auto c2 = a.u2().coefficients();
  ComplexBuffer packed(c1.size());
  for (std::size_t i = 0; i < packed.size(); ++i) packed[i] = c1[i] + kI * c2[i];
  a_packed_ = to_padded_physical(grid_, padded_, pad_map_, packed);
}

SpectralVectorField AdvectionOperator::apply_unprojected(const SpectralVectorField& b) const {
  if (!(b.grid() == grid_)) throw ConfigError("advection: fields live on different grids");
  const int p = padded_;
  const ComplexBuffer g1 = to_padded_physical(grid_, p, pad_map_, packed_gradient(b.u1()));
  const ComplexBuffer g2 = to_padded_physical(grid_, p, pad_map_, packed_gradient(b.u2()));

  ComplexBuffer product(g1.size());
  kernels::active().advect_pack(a_packed_.data(), g1.data(), g2.data(), product.data(),
                                product.size());
  ComplexBuffer spec(product.size());
  fft::forward(p, product.data(), spec.data());

  const double h = kTwoPi / p;
  const double half = 0.5 * h * h;
  const std::size_t n = grid_.size();
  const auto& k_inf = grid_.tables().k_inf;
  const auto& mirror = grid_.tables().mirror;
  ComplexBuffer n1(n);
  ComplexBuffer n2(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (k_inf[i] > b.truncation()) continue;
    const Complex z = spec[pad_map_[i]];
    const Complex zm = std::conj(spec[pad_map_[mirror[i]]]);
    n1[i] = half * (z + zm);
    n2[i] = half * Complex{0.0, -1.0} * (z - zm);
  }
  return {SpectralScalarField(grid_, b.truncation(), std::move(n1)),
          SpectralScalarField(grid_, b.truncation(), std::move(n2))};
}

SpectralVectorField AdvectionOperator::apply(const SpectralVectorField& b) const {
  return leray_project(apply_unprojected(b));
}

}  // namespace nsfourier
