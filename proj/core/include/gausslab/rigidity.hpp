#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gausslab/arith.hpp"
#include "gausslab/expsum.hpp"

namespace gausslab {

enum class DeficitBackend { Spectral, Correlation };
enum class GMode { MatchF, Legendre, Best };

/// C_f(p) = sum_{m=1}^{N-1} f(m) f(mp mod N), exact integer.
std::int64_t correlation(const ValueTable& v, std::uint64_t p);

/// D = (1/N) sum_{a mod N} |S_f(ap) - gp S_f(a)|^2, a = 0 included.
double deficit_spectral(const ExpSumTable& s, std::uint64_t p, int gp);

/// Same quantity through the exact identity D = 2(N-1) - 2 gp C_f(p).
double deficit_correlation(const ValueTable& v, std::uint64_t p, int gp);

struct DeficitRecord {
    std::uint64_t p = 0;
    std::int64_t C = 0;       // correlation C_f(p)
    double deficit = 0.0;
    int g = 1;                // chosen g(p)
};

struct RigidityReport {
    std::uint64_t N = 0;
    double c = 0.0;
    GMode g_mode = GMode::Best;
    std::string function_id;
    std::vector<DeficitRecord> records;  // ascending p
    double max_deficit = 0.0;
    std::uint64_t max_deficit_p = 0;
    double inferred_M = 0.0;   // N / max_deficit
    bool M_capped = false;     // max_deficit < 1: report M as ">= N"
    std::uint64_t g_mismatch_count = 0;  // primes with g(p) != f(p)
};

/// Scans every prime p <= N^c. Correlation backend unless spectral requested
/// (then `precomputed` supplies/receives the transform).
RigidityReport rigidity_scan(const MultiplicativeFunctionSpec& spec,
                             std::uint64_t N, double c, GMode g_mode,
                             DeficitBackend backend = DeficitBackend::Correlation,
                             unsigned threads = 0);

/// Same scan over an explicit value table (not necessarily multiplicative).
RigidityReport rigidity_scan_table(const ValueTable& v, double c, GMode g_mode,
                                   DeficitBackend backend = DeficitBackend::Correlation,
                                   unsigned threads = 0);

std::string rigidity_csv(const RigidityReport& r);
std::string rigidity_json(const RigidityReport& r);

}  // namespace gausslab
