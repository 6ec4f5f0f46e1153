#include "nsfourier/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "nsfourier/error.hpp"

namespace nsfourier {

namespace {

std::shared_ptr<const WavenumberTables> build_tables(int m) {
  auto t = std::make_shared<WavenumberTables>();
  const std::size_t n = static_cast<std::size_t>(m) * m;
  t->k1.resize(n);
  t->k2.resize(n);
  t->k_sq.resize(n);
  t->inv_k_sq.resize(n);
  t->k_inf.resize(n);
  t->mirror.resize(n);
  t->ones.assign(n, 1.0);
  auto wave = [m](int i) { return i <= m / 2 ? i : i - m; };
  for (int i2 = 0; i2 < m; ++i2) {
    for (int i1 = 0; i1 < m; ++i1) {
      const std::size_t idx = static_cast<std::size_t>(i2) * m + i1;
      const int k1 = wave(i1);
      const int k2 = wave(i2);
      t->k1[idx] = k1;
      t->k2[idx] = k2;
      const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
      t->k_sq[idx] = ksq;
      t->inv_k_sq[idx] = ksq > 0.0 ? 1.0 / ksq : 0.0;
      t->k_inf[idx] = std::max(std::abs(k1), std::abs(k2));
      t->mirror[idx] = static_cast<std::size_t>((m - i2) % m) * m + (m - i1) % m;
    }
  }
  return t;
}

}  // namespace

PhysicalGrid::PhysicalGrid(int points_per_axis) : m_(points_per_axis) {
  if (m_ < 4 || m_ % 2 != 0) {
    throw ConfigError("grid points per axis must be even and >= 4, got " + std::to_string(m_));
  }
  tables_ = build_tables(m_);
}

}  // namespace nsfourier
