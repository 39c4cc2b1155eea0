#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gausslab/arith.hpp"

namespace gausslab {

/// The N twisted sums S_f(a) = sum_{1<=n<N} f(n) e(an/N), a = 0..N-1.
struct ExpSumTable {
    std::uint64_t N = 0;
    std::vector<std::complex<double>> entries;
    std::string backend;       // "naive" | "bluestein"
    std::string function_id;

    const std::complex<double>& operator[](std::uint64_t a) const {
        return entries[a];
    }
};

/// Direct O(N^2) evaluation. Guarded to N <= 2^16.
ExpSumTable dft_naive(const ValueTable& v);

/// O(N log N) prime-length transform (Bluestein chirp-z). Matches dft_naive
/// within 1e-9 * sqrt(N) per entry.
ExpSumTable dft_fast(const ValueTable& v);

/// Little-endian cache format: u64 N, then N (f64 re, f64 im) pairs.
void write_expsum_binary(const ExpSumTable& t, std::ostream& out);
ExpSumTable read_expsum_binary(std::istream& in);
void write_expsum_binary_file(const ExpSumTable& t, const std::string& path);
ExpSumTable read_expsum_binary_file(const std::string& path);

}  // namespace gausslab
