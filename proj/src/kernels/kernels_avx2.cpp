// AVX2 kernels, two complex entries (four doubles) per register. Compiled with
// -mavx2 only: no FMA, so elementwise results match the scalar table bit for bit.
#include <immintrin.h>

#include "nsfourier/kernels.hpp"

namespace nsfourier::kernels {

namespace {

inline const double* dbl(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* dbl(Complex* p) { return reinterpret_cast<double*>(p); }

// [w_i, w_i, w_{i+1}, w_{i+1}]
inline __m256d pair_broadcast(const double* w) {
  const __m256d lo = _mm256_castpd128_pd256(_mm_loadu_pd(w));
  return _mm256_permute4x64_pd(lo, 0x50);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void scale(const double* w, const Complex* x, Complex* out, std::size_t n) {
  const double* xd = dbl(x);
  double* od = dbl(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(od + 2 * i, _mm256_mul_pd(pair_broadcast(w + i), _mm256_loadu_pd(xd + 2 * i)));
  }
  for (; i < n; ++i) {
    od[2 * i] = w[i] * xd[2 * i];
    od[2 * i + 1] = w[i] * xd[2 * i + 1];
  }
}

void scaled_axpy(const double* w, const Complex* x, double alpha, const Complex* y, Complex* out,
                 std::size_t n) {
  const double* xd = dbl(x);
  const double* yd = dbl(y);
  double* od = dbl(out);
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d s = _mm256_add_pd(_mm256_loadu_pd(xd + 2 * i),
                                    _mm256_mul_pd(va, _mm256_loadu_pd(yd + 2 * i)));
    _mm256_storeu_pd(od + 2 * i, _mm256_mul_pd(pair_broadcast(w + i), s));
  }
  for (; i < n; ++i) {
    od[2 * i] = w[i] * (xd[2 * i] + alpha * yd[2 * i]);
    od[2 * i + 1] = w[i] * (xd[2 * i + 1] + alpha * yd[2 * i + 1]);
  }
}

void mul_ik(const double* k, const Complex* x, Complex* out, std::size_t n) {
  const double* xd = dbl(x);
  double* od = dbl(out);
  // flip the sign of the real-output lanes: (re, im) -> (-k im, k re)
  const __m256d sign = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d swapped = _mm256_permute_pd(_mm256_loadu_pd(xd + 2 * i), 0x5);
    const __m256d kk = _mm256_xor_pd(pair_broadcast(k + i), sign);
    _mm256_storeu_pd(od + 2 * i, _mm256_mul_pd(kk, swapped));
  }
  for (; i < n; ++i) {
    const double re = xd[2 * i];
    const double im = xd[2 * i + 1];
    od[2 * i] = -k[i] * im;
    od[2 * i + 1] = k[i] * re;
  }
}

void advect_pack(const Complex* a, const Complex* b1, const Complex* b2, Complex* out,
                 std::size_t n) {
  const double* ad = dbl(a);
  const double* b1d = dbl(b1);
  const double* b2d = dbl(b2);
  double* od = dbl(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(ad + 2 * i);
    const __m256d p1 = _mm256_mul_pd(va, _mm256_loadu_pd(b1d + 2 * i));
    const __m256d p2 = _mm256_mul_pd(va, _mm256_loadu_pd(b2d + 2 * i));
    // hadd gives [p1_0 + p1_1, p2_0 + p2_1, p1_2 + p1_3, p2_2 + p2_3]
    _mm256_storeu_pd(od + 2 * i, _mm256_hadd_pd(p1, p2));
  }
  for (; i < n; ++i) {
    const double a1 = ad[2 * i];
    const double a2 = ad[2 * i + 1];
    od[2 * i] = a1 * b1d[2 * i] + a2 * b1d[2 * i + 1];
    od[2 * i + 1] = a1 * b2d[2 * i] + a2 * b2d[2 * i + 1];
  }
}

void leray(const double* k1, const double* k2, const double* inv_k_sq, const Complex* v1,
           const Complex* v2, Complex* o1, Complex* o2, std::size_t n) {
  const double* v1d = dbl(v1);
  const double* v2d = dbl(v2);
  double* o1d = dbl(o1);
  double* o2d = dbl(o2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d kk1 = pair_broadcast(k1 + i);
    const __m256d kk2 = pair_broadcast(k2 + i);
    const __m256d inv = pair_broadcast(inv_k_sq + i);
    const __m256d p = _mm256_loadu_pd(v1d + 2 * i);
    const __m256d q = _mm256_loadu_pd(v2d + 2 * i);
    const __m256d d =
        _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(kk1, p), _mm256_mul_pd(kk2, q)), inv);
    _mm256_storeu_pd(o1d + 2 * i, _mm256_sub_pd(p, _mm256_mul_pd(kk1, d)));
    _mm256_storeu_pd(o2d + 2 * i, _mm256_sub_pd(q, _mm256_mul_pd(kk2, d)));
  }
  for (; i < n; ++i) {
    for (int part = 0; part < 2; ++part) {
      const double p = v1d[2 * i + part];
      const double q = v2d[2 * i + part];
      const double d = (k1[i] * p + k2[i] * q) * inv_k_sq[i];
      o1d[2 * i + part] = p - k1[i] * d;
      o2d[2 * i + part] = q - k2[i] * d;
    }
  }
}

double weighted_norm2(const double* w, const Complex* x, std::size_t n) {
  const double* xd = dbl(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(pair_broadcast(w + i), _mm256_mul_pd(v, v)));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += w[i] * (xd[2 * i] * xd[2 * i] + xd[2 * i + 1] * xd[2 * i + 1]);
  return sum;
}

double weighted_dot(const double* w, const Complex* x, const Complex* y, std::size_t n) {
  const double* xd = dbl(x);
  const double* yd = dbl(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(xd + 2 * i), _mm256_loadu_pd(yd + 2 * i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(pair_broadcast(w + i), p));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += w[i] * (xd[2 * i] * yd[2 * i] + xd[2 * i + 1] * yd[2 * i + 1]);
  return sum;
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{"avx2",        scale, scaled_axpy,    mul_ik,
                                 advect_pack,   leray, weighted_norm2, weighted_dot};
  return table;
}

}  // namespace nsfourier::kernels
