#pragma once

#include "nsfourier/fields.hpp"

namespace nsfourier::fft {

/// Unnormalised 2D complex DFT of size n x n (FFTW), planned once per size and
/// shared across threads. Buffers must be 64-byte aligned and distinct.
/// forward:  Z(k) = sum_j z(j) e^{-2 pi i k.j/n}
/// backward: z(j) = sum_k Z(k) e^{+2 pi i k.j/n}
void forward(int n, const Complex* in, Complex* out);
void backward(int n, const Complex* in, Complex* out);

}  // namespace nsfourier::fft
