#pragma once

#include <cstddef>
#include <string_view>

#include "nsfourier/fields.hpp"

namespace nsfourier::kernels {

// Inner loops of the solver. Complex arrays are interleaved (re, im) doubles
// with 64-byte alignment; real weight arrays are indexed per complex entry.
// Elementwise kernels of every variant perform the same IEEE operations in the
// same order, so their outputs are bit-identical to the scalar reference.
// Reductions may differ in summation order.
struct KernelTable {
  const char* name;

  /// out = w * x
  void (*scale)(const double* w, const Complex* x, Complex* out, std::size_t n);
  /// out = w * (x + alpha * y)
  void (*scaled_axpy)(const double* w, const Complex* x, double alpha, const Complex* y,
                      Complex* out, std::size_t n);
  /// out = i * k * x
  void (*mul_ik)(const double* k, const Complex* x, Complex* out, std::size_t n);
  /// Packed advection product. a = a1 + i a2, b1 = dx v1 + i dy v1, b2 = dx v2 + i dy v2
  /// (all real fields on the padded grid); out = (a.grad v1) + i (a.grad v2).
  void (*advect_pack)(const Complex* a, const Complex* b1, const Complex* b2, Complex* out,
                      std::size_t n);
  /// Leray projection per mode: d = (k1 v1 + k2 v2) inv_k_sq, o = v - k d.
  void (*leray)(const double* k1, const double* k2, const double* inv_k_sq, const Complex* v1,
                const Complex* v2, Complex* o1, Complex* o2, std::size_t n);
  /// sum w |x|^2
  double (*weighted_norm2)(const double* w, const Complex* x, std::size_t n);
  /// sum w Re(conj(x) y)
  double (*weighted_dot)(const double* w, const Complex* x, const Complex* y, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// Table used by the solver. Chosen once from the CPU and the NSFOURIER_SIMD
/// environment variable (auto | scalar | avx2); overridable with select().
const KernelTable& active();

/// Force a variant by name ("scalar", "avx2", "auto"). Returns false if unavailable.
bool select(std::string_view name);

}  // namespace nsfourier::kernels
