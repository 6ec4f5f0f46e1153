// Scalar reference kernels. Operation order here is the contract the SIMD
// variants reproduce.
#include "nsfourier/kernels.hpp"

namespace nsfourier::kernels {

namespace {

// Complex arrays are read as interleaved doubles to make the operation order explicit.
inline const double* dbl(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* dbl(Complex* p) { return reinterpret_cast<double*>(p); }

void scale(const double* w, const Complex* x, Complex* out, std::size_t n) {
  const double* xd = dbl(x);
  double* od = dbl(out);
  for (std::size_t i = 0; i < n; ++i) {
    od[2 * i] = w[i] * xd[2 * i];
    od[2 * i + 1] = w[i] * xd[2 * i + 1];
  }
}

void scaled_axpy(const double* w, const Complex* x, double alpha, const Complex* y, Complex* out,
                 std::size_t n) {
  const double* xd = dbl(x);
  const double* yd = dbl(y);
  double* od = dbl(out);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = xd[2 * i] + alpha * yd[2 * i];
    const double im = xd[2 * i + 1] + alpha * yd[2 * i + 1];
    od[2 * i] = w[i] * re;
    od[2 * i + 1] = w[i] * im;
  }
}

void mul_ik(const double* k, const Complex* x, Complex* out, std::size_t n) {
  const double* xd = dbl(x);
  double* od = dbl(out);
  for (std::size_t i = 0; i < n; ++i) {
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
  for (std::size_t i = 0; i < n; ++i) {
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
  for (std::size_t i = 0; i < n; ++i) {
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
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += w[i] * (xd[2 * i] * xd[2 * i] + xd[2 * i + 1] * xd[2 * i + 1]);
  }
  return sum;
}

double weighted_dot(const double* w, const Complex* x, const Complex* y, std::size_t n) {
  const double* xd = dbl(x);
  const double* yd = dbl(y);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += w[i] * (xd[2 * i] * yd[2 * i] + xd[2 * i + 1] * yd[2 * i + 1]);
  }
  return sum;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",      scale, scaled_axpy,    mul_ik,
                                 advect_pack,   leray, weighted_norm2, weighted_dot};
  return table;
}

}  // namespace nsfourier::kernels
