#include "gausslab/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gausslab {

void fft_pow2(std::vector<std::complex<double>>& a, bool invert) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) *
                           (invert ? -1.0 : 1.0);
        // per-butterfly twiddles from the exact angle, not repeated products
        std::vector<std::complex<double>> w(len / 2);
        for (std::size_t k = 0; k < len / 2; ++k)
            w[k] = std::polar(1.0, ang * static_cast<double>(k));
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                auto u = a[i + k];
                auto v = a[i + k + len / 2] * w[k];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (invert) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

std::vector<std::complex<double>>
dft_bluestein(const std::vector<std::complex<double>>& x) {
    const std::uint64_t n = x.size();
    if (n == 0) return {};
    if (n == 1) return x;

    // chirp q[k] = e^{+pi i k^2 / n}; k^2 reduced mod 2n keeps angles small
    std::vector<std::complex<double>> chirp(n);
    const std::uint64_t two_n = 2 * n;
    for (std::uint64_t k = 0; k < n; ++k) {
        std::uint64_t m = (k % two_n) * (k % two_n) % two_n;
        chirp[k] = std::polar(1.0, std::numbers::pi * static_cast<double>(m) /
                                       static_cast<double>(n));
    }

    std::size_t L = 1;
    while (L < 2 * n - 1) L <<= 1;

    std::vector<std::complex<double>> u(L), v(L);
    for (std::uint64_t k = 0; k < n; ++k) u[k] = x[k] * chirp[k];
    v[0] = std::conj(chirp[0]);
    for (std::uint64_t k = 1; k < n; ++k)
        v[k] = v[L - k] = std::conj(chirp[k]);

    fft_pow2(u, false);
    fft_pow2(v, false);
    for (std::size_t i = 0; i < L; ++i) u[i] *= v[i];
    fft_pow2(u, true);

    std::vector<std::complex<double>> out(n);
    for (std::uint64_t k = 0; k < n; ++k) out[k] = u[k] * chirp[k];
    return out;
}

}  // namespace gausslab
