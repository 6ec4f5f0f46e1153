#include "nsfourier/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nsfourier/advection.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/fft.hpp"
#include "nsfourier/kernels.hpp"

namespace nsfourier {

namespace {

constexpr double kSymmetryTolerance = 1e-10;

double forward_scale(int m) {
  const double h = kTwoPi / m;
  return h * h;
}

constexpr double kInverseScale = 1.0 / (kTwoPi * kTwoPi);

void require_finite(const PhysicalField& f, int component) {
  const auto values = f.component(component);
  const int m = f.grid().points();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericalError("forward_transform: non-finite value in component " +
                           std::to_string(component) + " at (j2, j1) = (" +
                           std::to_string(i / m) + ", " + std::to_string(i % m) + ")");
    }
  }
}

ComplexBuffer hermitian_part(const SpectralScalarField& F) {
  const auto c = F.coefficients();
  const auto& mirror = F.grid().tables().mirror;
  ComplexBuffer out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = 0.5 * (c[i] + std::conj(c[mirror[i]]));
  return out;
}

void require_symmetric(const SpectralScalarField& F) {
  const double scale = F.max_abs();
  if (scale == 0.0) return;
  const double defect = F.conjugate_symmetry_defect();
  if (defect > kSymmetryTolerance * scale) {
    throw NumericalError("inverse_transform: conjugate symmetry violated (defect " +
                         std::to_string(defect / scale) + " relative)");
  }
}

std::vector<double> sobolev_weights(const PhysicalGrid& grid, double s, bool homogeneous) {
  if (!(s >= 0.0)) throw ConfigError("Sobolev order must be >= 0");
  const auto& ksq = grid.tables().k_sq;
  std::vector<double> w(ksq.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double ks = ksq[i] > 0.0 ? std::pow(ksq[i], s) : (s == 0.0 ? 1.0 : 0.0);
    if (homogeneous) {
      w[i] = ksq[i] > 0.0 ? ks : 0.0;
    } else {
      w[i] = s == 0.0 ? 1.0 : 1.0 + ks;
    }
  }
  return w;
}

double weighted_sum(const SpectralScalarField& F, const std::vector<double>& w) {
  return kernels::active().weighted_norm2(w.data(), F.coefficients().data(), w.size());
}

SpectralScalarField with_multiplier(const SpectralScalarField& F, const std::vector<double>& w) {
  ComplexBuffer out(F.coefficients().size());
  kernels::active().scale(w.data(), F.coefficients().data(), out.data(), out.size());
  return {F.grid(), F.truncation(), std::move(out)};
}

}  // namespace

SpectralScalarField forward_transform(const PhysicalField& f, int component) {
  return forward_transform(f, component, f.grid().max_truncation());
}

SpectralScalarField forward_transform(const PhysicalField& f, int component, int truncation) {
  if (component < 0 || component >= f.components()) throw ConfigError("no such component");
  require_finite(f, component);
  const PhysicalGrid& grid = f.grid();
  const int m = grid.points();
  const auto values = f.component(component);
  ComplexBuffer in(values.begin(), values.end());
  ComplexBuffer out(in.size());
  fft::forward(m, in.data(), out.data());
  const double scale = forward_scale(m);
  const auto& mirror = grid.tables().mirror;
  for (std::size_t i = 0; i < out.size(); ++i) {
    in[i] = 0.5 * scale * (out[i] + std::conj(out[mirror[i]]));
  }
  return {grid, truncation, std::move(in)};
}

SpectralVectorField forward_transform_vector(const PhysicalField& f) {
  return forward_transform_vector(f, f.grid().max_truncation());
}

SpectralVectorField forward_transform_vector(const PhysicalField& f, int truncation) {
  if (f.components() != 2) throw ConfigError("forward_transform_vector needs two components");
  require_finite(f, 0);
  require_finite(f, 1);
  const PhysicalGrid& grid = f.grid();
  const int m = grid.points();
  const auto x = f.component(0);
  const auto y = f.component(1);
  ComplexBuffer in(grid.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = Complex{x[i], y[i]};
  ComplexBuffer out(in.size());
  fft::forward(m, in.data(), out.data());
  const double half = 0.5 * forward_scale(m);
  const auto& mirror = grid.tables().mirror;
  ComplexBuffer c1(in.size());
  ComplexBuffer c2(in.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Complex z = out[i];
    const Complex zm = std::conj(out[mirror[i]]);
    c1[i] = half * (z + zm);
    c2[i] = half * Complex{0.0, -1.0} * (z - zm);
  }
  return {SpectralScalarField(grid, truncation, std::move(c1)),
          SpectralScalarField(grid, truncation, std::move(c2))};
}

PhysicalField inverse_transform(const SpectralScalarField& F) {
  require_symmetric(F);
  const PhysicalGrid& grid = F.grid();
  ComplexBuffer in = hermitian_part(F);
  ComplexBuffer out(in.size());
  fft::backward(grid.points(), in.data(), out.data());
  std::vector<double> values(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) values[i] = kInverseScale * out[i].real();
  return {grid, 1, std::move(values)};
}

PhysicalField inverse_transform(const SpectralVectorField& v) {
  require_symmetric(v.u1());
  require_symmetric(v.u2());
  const PhysicalGrid& grid = v.grid();
  const ComplexBuffer h1 = hermitian_part(v.u1());
  const ComplexBuffer h2 = hermitian_part(v.u2());
  ComplexBuffer in(h1.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = h1[i] + Complex{0.0, 1.0} * h2[i];
  ComplexBuffer out(in.size());
  fft::backward(grid.points(), in.data(), out.data());
  const std::size_t n = out.size();
  std::vector<double> values(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = kInverseScale * out[i].real();
    values[n + i] = kInverseScale * out[i].imag();
  }
  return {grid, 2, std::move(values)};
}

SpectralScalarField truncate(const SpectralScalarField& F, int n) {
  if (n < 0 || n > F.grid().max_truncation()) {
    throw ConfigError("truncate: N = " + std::to_string(n) + " outside [0, M/2 - 1]");
  }
  const auto c = F.coefficients();
  ComplexBuffer out(c.begin(), c.end());
  // keep the field's own radius so the result stays addable to its source
  const auto& k_inf = F.grid().tables().k_inf;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (k_inf[i] > n) out[i] = Complex{};
  }
  return {F.grid(), F.truncation(), std::move(out)};
}

SpectralVectorField truncate(const SpectralVectorField& v, int n) {
  return {truncate(v.u1(), n), truncate(v.u2(), n)};
}

SpectralScalarField spectral_derivative(const SpectralScalarField& F, int axis, int order) {
  if (axis != 1 && axis != 2) throw ConfigError("derivative axis must be 1 or 2");
  if (order < 1) throw ConfigError("derivative order must be positive");
  const auto& k = axis == 1 ? F.grid().tables().k1 : F.grid().tables().k2;
  const auto c = F.coefficients();
  ComplexBuffer cur(c.begin(), c.end());
  ComplexBuffer next(cur.size());
  for (int p = 0; p < order; ++p) {
    kernels::active().mul_ik(k.data(), cur.data(), next.data(), cur.size());
    cur.swap(next);
  }
  return {F.grid(), F.truncation(), std::move(cur)};
}

SpectralScalarField laplacian(const SpectralScalarField& F) {
  const auto& ksq = F.grid().tables().k_sq;
  std::vector<double> w(ksq.size());
  std::transform(ksq.begin(), ksq.end(), w.begin(), [](double x) { return -x; });
  return with_multiplier(F, w);
}

SpectralScalarField fractional_lambda(const SpectralScalarField& F, double s) {
  if (!(s >= 0.0)) throw ConfigError("fractional_lambda: s must be >= 0");
  const auto& ksq = F.grid().tables().k_sq;
  std::vector<double> w(ksq.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = ksq[i] > 0.0 ? std::pow(ksq[i], 0.5 * s) : 0.0;
  return with_multiplier(F, w);
}

SpectralVectorField leray_project(const SpectralVectorField& v) {
  const auto& t = v.grid().tables();
  ComplexBuffer o1(v.grid().size());
  ComplexBuffer o2(v.grid().size());
  kernels::active().leray(t.k1.data(), t.k2.data(), t.inv_k_sq.data(), v.u1().coefficients().data(),
                          v.u2().coefficients().data(), o1.data(), o2.data(), o1.size());
  return {SpectralScalarField(v.grid(), v.truncation(), std::move(o1)),
          SpectralScalarField(v.grid(), v.truncation(), std::move(o2))};
}

double max_divergence(const SpectralVectorField& v) {
  const auto& t = v.grid().tables();
  const auto c1 = v.u1().coefficients();
  const auto c2 = v.u2().coefficients();
  double worst = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    worst = std::max(worst, std::abs(t.k1[i] * c1[i] + t.k2[i] * c2[i]));
  }
  return worst;
}

SpectralScalarField curl(const SpectralVectorField& v) {
  return spectral_derivative(v.u2(), 1) - spectral_derivative(v.u1(), 2);
}

double sobolev_norm(const SpectralScalarField& F, double s) {
  return std::sqrt(weighted_sum(F, sobolev_weights(F.grid(), s, false))) / kTwoPi;
}

double sobolev_norm(const SpectralVectorField& v, double s) {
  const auto w = sobolev_weights(v.grid(), s, false);
  return std::sqrt(weighted_sum(v.u1(), w) + weighted_sum(v.u2(), w)) / kTwoPi;
}

double sobolev_seminorm(const SpectralScalarField& F, double s) {
  return std::sqrt(weighted_sum(F, sobolev_weights(F.grid(), s, true))) / kTwoPi;
}

double sobolev_seminorm(const SpectralVectorField& v, double s) {
  const auto w = sobolev_weights(v.grid(), s, true);
  return std::sqrt(weighted_sum(v.u1(), w) + weighted_sum(v.u2(), w)) / kTwoPi;
}

double l2_norm(const SpectralScalarField& F) {
  const auto& ones = F.grid().tables().ones;
  return std::sqrt(kernels::active().weighted_norm2(ones.data(), F.coefficients().data(),
                                                    ones.size())) /
         kTwoPi;
}

double l2_norm(const SpectralVectorField& v) {
  const auto& ones = v.grid().tables().ones;
  const auto& k = kernels::active();
  const double s = k.weighted_norm2(ones.data(), v.u1().coefficients().data(), ones.size()) +
                   k.weighted_norm2(ones.data(), v.u2().coefficients().data(), ones.size());
  return std::sqrt(s) / kTwoPi;
}

double inner_product(const SpectralScalarField& f, const SpectralScalarField& g) {
  if (!(f.grid() == g.grid())) throw ConfigError("inner_product: fields live on different grids");
  const auto& ones = f.grid().tables().ones;
  return kInverseScale * kernels::active().weighted_dot(ones.data(), f.coefficients().data(),
                                                        g.coefficients().data(), ones.size());
}

double inner_product(const SpectralVectorField& f, const SpectralVectorField& g) {
  return inner_product(f.u1(), g.u1()) + inner_product(f.u2(), g.u2());
}

SpectralVectorField convective_term(const SpectralVectorField& a, const SpectralVectorField& b) {
  if (!(a.grid() == b.grid())) throw ConfigError("convective_term: fields live on different grids");
  return AdvectionOperator(a).apply(b);
}

}  // namespace nsfourier
