#include "nsfourier/fields.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nsfourier/error.hpp"

namespace nsfourier {

namespace {

void enforce_band(const PhysicalGrid& grid, int truncation, ComplexBuffer& c) {
  const auto& k_inf = grid.tables().k_inf;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (k_inf[i] > truncation) c[i] = Complex{};
  }
}

void check_truncation(const PhysicalGrid& grid, int truncation) {
  if (truncation < 0 || truncation > grid.max_truncation()) {
    throw ConfigError("truncation radius " + std::to_string(truncation) + " outside [0, " +
                      std::to_string(grid.max_truncation()) + "]");
  }
}

}  // namespace

SpectralScalarField::SpectralScalarField(PhysicalGrid grid, int truncation)
    : grid_(std::move(grid)), truncation_(truncation), coefficients_(grid_.size()) {
  check_truncation(grid_, truncation_);
}

SpectralScalarField::SpectralScalarField(PhysicalGrid grid, int truncation,
                                         ComplexBuffer coefficients)
    : grid_(std::move(grid)), truncation_(truncation), coefficients_(std::move(coefficients)) {
  check_truncation(grid_, truncation_);
  if (coefficients_.size() != grid_.size()) {
    throw ConfigError("coefficient array size does not match grid");
  }
  enforce_band(grid_, truncation_, coefficients_);
}

Complex SpectralScalarField::coeff(int k1, int k2) const {
  const int m = grid_.points();
  if (k1 <= -m / 2 || k1 > m / 2 || k2 <= -m / 2 || k2 > m / 2) return {};
  return coefficients_[grid_.flat(grid_.index_of(k2), grid_.index_of(k1))];
}

double SpectralScalarField::conjugate_symmetry_defect() const {
  const auto& mirror = grid_.tables().mirror;
  double defect = 0.0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    defect = std::max(defect, std::abs(coefficients_[i] - std::conj(coefficients_[mirror[i]])));
  }
  return defect;
}

double SpectralScalarField::max_abs() const {
  double m = 0.0;
  for (const auto& c : coefficients_) m = std::max(m, std::abs(c));
  return m;
}

SpectralVectorField::SpectralVectorField(SpectralScalarField u1, SpectralScalarField u2)
    : u1_(std::move(u1)), u2_(std::move(u2)) {
  require_same_layout(u1_, u2_);
}

SpectralVectorField SpectralVectorField::zero(const PhysicalGrid& grid, int truncation) {
  return {SpectralScalarField(grid, truncation), SpectralScalarField(grid, truncation)};
}

PhysicalField::PhysicalField(PhysicalGrid grid, int components)
    : grid_(std::move(grid)), components_(components) {
  if (components_ != 1 && components_ != 2) throw ConfigError("physical field needs 1 or 2 components");
  values_.assign(static_cast<std::size_t>(components_) * grid_.size(), 0.0);
}

PhysicalField::PhysicalField(PhysicalGrid grid, int components, std::vector<double> values)
    : grid_(std::move(grid)), components_(components), values_(std::move(values)) {
  if (components_ != 1 && components_ != 2) throw ConfigError("physical field needs 1 or 2 components");
  if (values_.size() != static_cast<std::size_t>(components_) * grid_.size()) {
    throw ConfigError("physical field value count does not match grid");
  }
}

std::span<const double> PhysicalField::component(int c) const {
  return std::span<const double>(values_).subspan(c * grid_.size(), grid_.size());
}

std::span<double> PhysicalField::component(int c) {
  return std::span<double>(values_).subspan(c * grid_.size(), grid_.size());
}

bool PhysicalField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

void require_same_layout(const SpectralScalarField& a, const SpectralScalarField& b) {
  if (!(a.grid() == b.grid())) throw ConfigError("fields live on different grids");
  if (a.truncation() != b.truncation()) throw ConfigError("fields have different truncation radii");
}

void require_same_layout(const SpectralVectorField& a, const SpectralVectorField& b) {
  require_same_layout(a.u1(), b.u1());
}

namespace {

template <class Op>
SpectralScalarField combine(const SpectralScalarField& a, const SpectralScalarField& b, Op op) {
  require_same_layout(a, b);
  ComplexBuffer out(a.coefficients().size());
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(ca[i], cb[i]);
  return {a.grid(), a.truncation(), std::move(out)};
}

}  // namespace

SpectralScalarField operator+(const SpectralScalarField& a, const SpectralScalarField& b) {
  return combine(a, b, [](Complex x, Complex y) { return x + y; });
}

SpectralScalarField operator-(const SpectralScalarField& a, const SpectralScalarField& b) {
  return combine(a, b, [](Complex x, Complex y) { return x - y; });
}

SpectralScalarField operator*(double s, const SpectralScalarField& a) {
  return combine(a, a, [s](Complex x, Complex) { return s * x; });
}

SpectralVectorField operator+(const SpectralVectorField& a, const SpectralVectorField& b) {
  return {a.u1() + b.u1(), a.u2() + b.u2()};
}

SpectralVectorField operator-(const SpectralVectorField& a, const SpectralVectorField& b) {
  return {a.u1() - b.u1(), a.u2() - b.u2()};
}

SpectralVectorField operator*(double s, const SpectralVectorField& a) {
  return {s * a.u1(), s * a.u2()};
}

SpectralVectorField axpy(const SpectralVectorField& a, double s, const SpectralVectorField& b) {
  auto one = [s](const SpectralScalarField& x, const SpectralScalarField& y) {
    return combine(x, y, [s](Complex p, Complex q) { return p + s * q; });
  };
  return {one(a.u1(), b.u1()), one(a.u2(), b.u2())};
}

}  // namespace nsfourier
