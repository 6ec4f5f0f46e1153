#pragma once

#include <cstddef>
#include <memory>
#include <numbers>
#include <vector>

namespace nsfourier {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Per-grid wavenumber tables, laid out like the coefficient arrays
/// (row index i2 for k2, column index i1 for k1).
struct WavenumberTables {
  std::vector<double> k1;
  std::vector<double> k2;
  std::vector<double> k_sq;      // |k|^2
  std::vector<double> inv_k_sq;  // 1/|k|^2, 0 at k = 0
  std::vector<int> k_inf;        // max(|k1|, |k2|)
  std::vector<std::size_t> mirror;  // flat index of -k
  std::vector<double> ones;
};

/// Uniform M x M collocation grid on [0, 2pi)^2.
class PhysicalGrid {
 public:
  explicit PhysicalGrid(int points_per_axis);

  int points() const { return m_; }
  std::size_t size() const { return static_cast<std::size_t>(m_) * m_; }
  double spacing() const { return kTwoPi / m_; }
  double node(int j) const { return j * spacing(); }
  /// Largest truncation radius that keeps the Nyquist row/column out.
  int max_truncation() const { return m_ / 2 - 1; }

  /// Signed wavenumber of FFT index i (range -M/2+1 .. M/2).
  int wavenumber(int i) const { return i <= m_ / 2 ? i : i - m_; }
  /// FFT index of signed wavenumber k.
  int index_of(int k) const { return ((k % m_) + m_) % m_; }
  std::size_t flat(int i2, int i1) const { return static_cast<std::size_t>(i2) * m_ + i1; }

  const WavenumberTables& tables() const { return *tables_; }

  friend bool operator==(const PhysicalGrid& a, const PhysicalGrid& b) { return a.m_ == b.m_; }

 private:
  int m_;
  std::shared_ptr<const WavenumberTables> tables_;
};

}  // namespace nsfourier
