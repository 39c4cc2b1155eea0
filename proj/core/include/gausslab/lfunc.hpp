#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gausslab/arith.hpp"

namespace gausslab {

/// Partial sums T(X) = sum_{n<=X} chi(n) of the Legendre character mod N.
struct CharSumTable {
    std::uint64_t N = 0;
    std::vector<std::int32_t> partial;  // partial[X-1] = T(X), X = 1..N-1
    std::uint64_t max_abs = 0;

    std::int32_t T(std::uint64_t X) const { return partial[X - 1]; }
};

CharSumTable char_partial_sums(std::uint64_t N);

/// Burgess-shape diagnostic: max over X >= N^{1/4+delta} of
/// |T(X)| / (X N^{-delta^2/2}). Informational only.
double burgess_diagnostic(const CharSumTable& t, double delta);

struct LValueQuery {
    std::uint64_t N = 0;  // odd prime >= 3
    double s = 1.0;       // in (0.05, 64]
};

/// Caches the character values and summation grid for one modulus so a scan
/// in s costs one pass per evaluation.
class LValueEvaluator {
  public:
    explicit LValueEvaluator(std::uint64_t N);
    std::uint64_t modulus() const { return N_; }
    /// L(s, chi_N) on the real axis, |error| well below 1e-9 for s in (0.05, 4].
    double operator()(double s) const;

  private:
    std::uint64_t N_;
    std::vector<std::int8_t> chi_;       // chi(a), a = 1..N-1
    std::vector<double> log_grid_;       // log(k + a/N) for the direct block
};

double l_value(const LValueQuery& q);

struct RealZero {
    double beta = 0.0;
    double one_minus_beta_log_N = 0.0;
};

/// Sign-change scan of s -> L(s,chi) on [sigma_min, 1], grid step 1e-3,
/// brackets refined to width 1e-8.
std::vector<RealZero> real_zero_scan(std::uint64_t N, double sigma_min);

struct ChiPrimeSum {
    double sum = 0.0;        // sum_{p<N} chi(p)/p
    double euler_L1 = 0.0;   // prod_{p<N} (1 - chi(p)/p)^{-1}
    double direct_L1 = 0.0;  // l_value at s = 1
};

ChiPrimeSum chi_prime_sum(std::uint64_t N);

/// One row of the Liouville-vs-character diagnostic pipeline.
struct CorollaryRow {
    std::uint64_t N = 0;
    double lambda_chi_mean = 0.0;   // (1/N) sum_{n<N} lambda(n) chi(n)
    double chi_prime_sum = 0.0;
    double L1_direct = 0.0;
    double L1_euler = 0.0;
    std::uint64_t num_real_zeros = 0;
    double min_one_minus_beta_log_N = 0.0;  // 0 when no zero found
};

CorollaryRow corollary_row(std::uint64_t N, double sigma_min = 0.5);

std::string corollary_csv_header();
std::string corollary_csv_row(const CorollaryRow& r);

}  // namespace gausslab
