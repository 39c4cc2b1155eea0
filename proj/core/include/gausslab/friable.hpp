#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gausslab {

/// Query for counts of n <= x with every prime factor in (z, y]
/// (optionally inside a prime set A, optionally n = a (mod q)).
struct FriableQuery {
    double x = 0;                 // counts use floor(x); may exceed 2^53 only for alpha
    std::uint64_t y = 0;
    std::uint64_t z = 1;
    std::optional<std::uint64_t> q;   // prime modulus
    std::optional<std::uint64_t> a;   // residue class, 0 <= a < q
    std::function<bool(std::uint64_t)> allowed;  // null = all primes allowed

    double u() const;  // log x / log y
    double v() const;  // log x / log z
    double w() const;  // log x / log q (0 if q absent)
};

/// Exact Theta(x,y,z[;q,a]) by a segmented factoring sieve. Guard x <= 1e8.
std::uint64_t theta_count(const FriableQuery& fq);
std::uint64_t theta_count(std::uint64_t x, std::uint64_t y, std::uint64_t z);
std::uint64_t theta_count(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                          std::uint64_t q, std::uint64_t a);

/// Psi(x,y) = Theta(x,y,1): y-friable integers up to x.
std::uint64_t psi_count(std::uint64_t x, std::uint64_t y);

struct SaddlePoint {
    double alpha = 0.0;
    double residual = 0.0;
    unsigned iterations = 0;
};

/// Unique sigma with sum_{z<p<=y} log p / (p^sigma - 1) = log x.
/// x enters only through log x, so arbitrarily large x is fine.
SaddlePoint solve_alpha(double x, std::uint64_t y, std::uint64_t z);

/// zeta(sigma, y, z) = prod_{z<p<=y} (1 - p^-sigma)^-1. Empty product = 1.
double zeta_partial(double sigma, std::uint64_t y, std::uint64_t z);

struct SaiasComparison {
    std::uint64_t brute = 0;
    double estimate = 0.0;   // x^alpha zeta(alpha,y,z) / sqrt(log x log y)
    double ratio = 0.0;
    SaddlePoint saddle;
};

SaiasComparison saias_compare(std::uint64_t x, std::uint64_t y, std::uint64_t z);

struct EquidistributionReport {
    std::uint64_t x = 0, y = 0, z = 0, q = 0;
    std::vector<std::uint64_t> counts;  // index a in [0, q)
    std::uint64_t total = 0;            // Theta(x,y,z)
    std::uint64_t min_count = 0, max_count = 0;  // over a in [1, q-1]
    double mean = 0.0;
    double relative_spread = 0.0;       // (max - min) / mean
    bool q_le_y = false;                // a = 0 bucket can be nonempty
    bool partition_exact = false;       // sum_a counts = total
};

EquidistributionReport equidistribution_report(std::uint64_t x, std::uint64_t y,
                                               std::uint64_t z, std::uint64_t q);

std::string equidistribution_csv(const EquidistributionReport& r);
std::string saias_csv_header();
std::string saias_csv_row(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                          const SaiasComparison& c);

}  // namespace gausslab
