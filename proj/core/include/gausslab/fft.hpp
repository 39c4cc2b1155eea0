#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace gausslab {

/// In-place radix-2 FFT, n a power of two. invert = true divides by n.
void fft_pow2(std::vector<std::complex<double>>& a, bool invert);

/// Length-N DFT with positive-exponent kernel e(+jk/N), N arbitrary (used at
/// prime N), via the Bluestein chirp-z re-expression to a power-of-two cyclic
/// convolution. O(N log N).
std::vector<std::complex<double>>
dft_bluestein(const std::vector<std::complex<double>>& x);

}  // namespace gausslab
