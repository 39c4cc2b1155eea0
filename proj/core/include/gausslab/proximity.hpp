#pragma once

#include <cstdint>
#include <string>

#include "gausslab/arith.hpp"

namespace gausslab {

struct ProximityConfig {
    double kappa = 0.1;             // Hall-Tenenbaum constant, arbitrary scale
    double delta1_threshold = -2.0 / 3.0;
};

struct DistanceReport {
    std::uint64_t N = 0;
    std::string f_id, psi_id;
    std::uint64_t distance = 0;     // |{n < N : f(n) != psi(n)}|
    double mean_fpsi = 0.0;         // (1/(N-1)) sum f(n) psi(n)
    double prime_distance = 0.0;    // sum_{p<N, f(p)!=psi(p)} 1/p
    double ht_bound = 0.0;          // N exp(-kappa sum_{p<=N}(1-f(p)psi(p))/p)
};

/// Exact count of n in [1, N-1] with f(n) != psi(n).
std::uint64_t distance_count(const ValueTable& f, const ValueTable& psi);

DistanceReport prime_distance(const ValueTable& f, const ValueTable& psi,
                              const ProximityConfig& cfg = {});

/// (1/N) sum_{n<N} f(n).
double mean_value(const ValueTable& f);
/// Diagnostic flag for a mean below the -2/3 spectrum threshold.
bool mean_below_spectrum_threshold(const ValueTable& f,
                                   const ProximityConfig& cfg = {});

enum class RealCharacter { Principal, Legendre };

struct BestCharacter {
    RealCharacter which = RealCharacter::Principal;
    double correlation = 0.0;  // (1/N) sum f(n) psi(n)
};

/// Whichever of the two real characters mod N correlates best with f.
BestCharacter best_real_character(const ValueTable& f);

std::string distance_csv_header();
std::string distance_csv_row(const DistanceReport& r);

}  // namespace gausslab
