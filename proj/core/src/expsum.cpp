#include "gausslab/expsum.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "gausslab/fft.hpp"

namespace gausslab {

ExpSumTable dft_naive(const ValueTable& v) {
    const std::uint64_t N = v.N;
    if (N > (std::uint64_t(1) << 16))
        throw std::length_error("dft_naive: N above 2^16 guard, use dft_fast");
    ExpSumTable t;
    t.N = N;
    t.backend = "naive";
    t.function_id = v.function_id;
    t.entries.assign(N, {0.0, 0.0});

    std::vector<std::complex<double>> root(N);
    for (std::uint64_t k = 0; k < N; ++k)
        root[k] = std::polar(1.0, 2.0 * std::numbers::pi *
                                      static_cast<double>(k) /
                                      static_cast<double>(N));
    for (std::uint64_t a = 0; a < N; ++a) {
        std::complex<double> s{0.0, 0.0};
        std::uint64_t idx = 0;  // (a*n) mod N, stepped by a
        for (std::uint64_t n = 1; n < N; ++n) {
            idx += a;
            if (idx >= N) idx -= N;
            s += static_cast<double>(v.values[n - 1]) * root[idx];
        }
        t.entries[a] = s;
    }
    return t;
}

ExpSumTable dft_fast(const ValueTable& v) {
    const std::uint64_t N = v.N;
    if (!is_prime(N)) throw std::domain_error("dft_fast: N must be prime");
    std::vector<std::complex<double>> x(N, {0.0, 0.0});
    for (std::uint64_t n = 1; n < N; ++n)
        x[n] = {static_cast<double>(v.values[n - 1]), 0.0};
    ExpSumTable t;
    t.N = N;
    t.backend = "bluestein";
    t.function_id = v.function_id;
    t.entries = dft_bluestein(x);
    return t;
}

void write_expsum_binary(const ExpSumTable& t, std::ostream& out) {
    auto put_u64 = [&](std::uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        out.write(reinterpret_cast<const char*>(b), 8);
    };
    auto put_f64 = [&](double d) {
        std::uint64_t v;
        std::memcpy(&v, &d, 8);
        put_u64(v);
    };
    put_u64(t.N);
    for (const auto& z : t.entries) {
        put_f64(z.real());
        put_f64(z.imag());
    }
    if (!out) throw std::runtime_error("write_expsum_binary: write failed");
}

ExpSumTable read_expsum_binary(std::istream& in) {
    auto get_u64 = [&]() {
        unsigned char b[8];
        in.read(reinterpret_cast<char*>(b), 8);
        if (!in) throw std::runtime_error("read_expsum_binary: truncated input");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
        return v;
    };
    auto get_f64 = [&]() {
        std::uint64_t v = get_u64();
        double d;
        std::memcpy(&d, &v, 8);
        return d;
    };
    ExpSumTable t;
    t.N = get_u64();
    t.backend = "cached";
    t.entries.resize(t.N);
    for (auto& z : t.entries) {
        double re = get_f64();
        double im = get_f64();
        z = {re, im};
    }
    return t;
}

void write_expsum_binary_file(const ExpSumTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_expsum_binary(t, out);
}

ExpSumTable read_expsum_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_expsum_binary(in);
}

}  // namespace gausslab
