#include "nsfourier/scenarios.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "nsfourier/error.hpp"
#include "nsfourier/spectral.hpp"

namespace nsfourier {

namespace {

constexpr double kPi = std::numbers::pi;

template <class Fn>
SpectralScalarField sample_scalar(const PhysicalGrid& grid, Fn fn) {
  PhysicalField f(grid, 1);
  const int m = grid.points();
  for (int j2 = 0; j2 < m; ++j2) {
    for (int j1 = 0; j1 < m; ++j1) f.at(0, j2, j1) = fn(grid.node(j1), grid.node(j2));
  }
  return forward_transform(f);
}

template <class Fn>
SpectralVectorField sample_vector(const PhysicalGrid& grid, Fn fn) {
  PhysicalField f(grid, 2);
  const int m = grid.points();
  for (int j2 = 0; j2 < m; ++j2) {
    for (int j1 = 0; j1 < m; ++j1) {
      const auto [a, b] = fn(grid.node(j1), grid.node(j2));
      f.at(0, j2, j1) = a;
      f.at(1, j2, j1) = b;
    }
  }
  return forward_transform_vector(f);
}

double sech_sq(double z) {
  const double c = std::cosh(z);
  return 1.0 / (c * c);
}

}  // namespace

double centered_coordinate(double x) { return x <= kPi ? x : x - 2.0 * kPi; }

SpectralVectorField taylor_green_family(int m, const PhysicalGrid& grid) {
  if (m < 1) throw ConfigError("Taylor-Green family needs m >= 1");
  const double half_m = 0.5 * m;
  return sample_vector(grid, [&](double x, double y) {
    const double cx = std::cos(x);
    const double cy = std::cos(y);
    const double u1 = -half_m * std::pow(cx, m) * std::pow(cy, m - 1) * std::sin(y);
    const double u2 = half_m * std::pow(cx, m - 1) * std::pow(cy, m) * std::sin(x);
    return std::pair{u1, u2};
  });
}

SpectralScalarField double_shear_vorticity(double rho0, const PhysicalGrid& grid) {
  if (!(rho0 > 0.0)) throw ConfigError("shear layer width rho0 must be positive");
  return sample_scalar(grid, [rho0](double xg, double yg) {
    const double x = centered_coordinate(xg);
    const double y = centered_coordinate(yg);
    const double base = 0.05 * std::cos(x + kPi);
    if (y <= 0.0) return base - sech_sq((y + 0.5 * kPi) / rho0) / rho0;
    return base + sech_sq((y - 0.5 * kPi) / rho0) / rho0;
  });
}

SpectralScalarField gaussian_vortices_vorticity(const PhysicalGrid& grid) {
  return sample_scalar(grid, [](double xg, double yg) {
    const double x = centered_coordinate(xg);
    const double y = centered_coordinate(yg);
    const double a = x + 0.25 * kPi;
    const double b = x - 0.25 * kPi;
    return std::exp(-5.0 * (a * a + y * y)) + std::exp(-5.0 * (b * b + y * y));
  });
}

SpectralVectorField velocity_from_vorticity(const SpectralScalarField& w) {
  const auto& t = w.grid().tables();
  const auto c = w.coefficients();
  ComplexBuffer u1(c.size());
  ComplexBuffer u2(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    // psi^ = -w^/|k|^2, u = (-dy psi, dx psi)
    const Complex psi = -c[i] * t.inv_k_sq[i];
    u1[i] = Complex{0.0, -t.k2[i]} * psi;
    u2[i] = Complex{0.0, t.k1[i]} * psi;
  }
  return {SpectralScalarField(w.grid(), w.truncation(), std::move(u1)),
          SpectralScalarField(w.grid(), w.truncation(), std::move(u2))};
}

SpectralVectorField manufactured_velocity(double t, const PhysicalGrid& grid) {
  if (!(t >= 0.0)) throw ConfigError("manufactured solution needs t >= 0");
  const double amp = 0.5 * std::exp(-t);
  return sample_vector(grid, [amp](double x, double y) {
    return std::pair{-amp * std::sin(x) * std::cos(y), amp * std::cos(x) * std::sin(y)};
  });
}

SpectralVectorField manufactured_forcing(double t, ForcingMode, const PhysicalGrid& grid) {
  const SpectralVectorField u = manufactured_velocity(t, grid);
  return convective_term(u, u) - u;
}

ManufacturedForcing::ManufacturedForcing(const PhysicalGrid& grid)
    : base_(manufactured_velocity(0.0, grid)), convection_(convective_term(base_, base_)) {}

SpectralVectorField ManufacturedForcing::operator()(double t) const {
  return axpy(std::exp(-2.0 * t) * convection_, -std::exp(-t), base_);
}

Scenario make_scenario(const std::string& name, const PhysicalGrid& grid,
                       const ScenarioParams& params) {
  if (name == "taylor-green") {
    return {name, grid, taylor_green_family(params.taylor_green_m, grid), {}, {}};
  }
  if (name == "double-shear") {
    return {name, grid, velocity_from_vorticity(double_shear_vorticity(params.shear_width, grid)),
            {}, {}};
  }
  if (name == "gaussian-vortices") {
    return {name, grid, velocity_from_vorticity(gaussian_vortices_vorticity(grid)), {}, {}};
  }
  if (name == "manufactured") {
    auto forcing = std::make_shared<ManufacturedForcing>(grid);
    return {name, grid, manufactured_velocity(0.0, grid),
            [grid](double t) { return manufactured_velocity(t, grid); },
            [forcing](double t) { return (*forcing)(t); }};
  }
  throw ConfigError("unknown scenario '" + name +
                    "' (expected taylor-green, double-shear, gaussian-vortices, manufactured)");
}

}  // namespace nsfourier
