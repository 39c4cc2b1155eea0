#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gausslab/arith.hpp"

namespace gausslab {

/// Packed residue subset of Z/qZ.
class ResidueSet {
  public:
    ResidueSet() = default;
    explicit ResidueSet(std::uint64_t q) : q_(q), bits_((q + 63) / 64, 0) {}

    std::uint64_t modulus() const { return q_; }
    bool test(std::uint64_t r) const {
        return (bits_[r >> 6] >> (r & 63)) & 1;
    }
    void set(std::uint64_t r) { bits_[r >> 6] |= std::uint64_t(1) << (r & 63); }
    std::uint64_t count() const;
    std::vector<std::uint64_t> elements() const;
    bool operator==(const ResidueSet&) const = default;

  private:
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Level sets of k-fold products of primes < X inside (Z/qZ)^*, with one
/// stored witness factorization per covered residue.
struct CoverState {
    std::uint64_t q = 0;
    std::uint64_t X = 0;
    std::vector<std::uint64_t> primes;       // primes < X, p % q != 0
    std::vector<ResidueSet> levels;          // levels[k-1] = exact-k products
    std::vector<ResidueSet> cumulative;      // cumulative[k-1] = Omega <= k
    bool no_primes = false;

    // first coverage bookkeeping: depth 0 means uncovered
    std::vector<std::uint8_t> first_level;
    std::vector<std::uint32_t> witness_prime;
    std::vector<std::uint32_t> witness_pred;

    bool covered(std::uint64_t r) const { return first_level[r] != 0; }
    /// Prime factorization (with multiplicity) of the stored witness for r.
    std::vector<std::uint64_t> witness_factorization(std::uint64_t r) const;
};

/// Exact-k product sets for k = 1..kmax. Guards q <= 2^26.
CoverState product_levels(std::uint64_t q, std::uint64_t X, unsigned kmax);

/// Least K <= kmax with full coverage of (Z/qZ)^*, if any.
std::optional<unsigned> minimal_cover_k(std::uint64_t q, std::uint64_t X,
                                        unsigned kmax);
std::optional<unsigned> minimal_cover_k(const CoverState& st);

enum class FreimanResult { Grows, Covers, PreconditionFailed };

/// Freiman dichotomy in the multiplicative group (Z/qZ)^*, q prime:
/// if S is not contained in a coset of a proper subgroup, then either
/// |S^(2)| >= (3/2)|S| or S^(4) is the whole group.
FreimanResult freiman_check(std::uint64_t q, const std::vector<std::uint64_t>& S);
/// Same dichotomy in the abstract cyclic group Z_m (additive).
FreimanResult freiman_check_cyclic(std::uint64_t m,
                                   const std::vector<std::uint64_t>& S);

struct Representative {
    std::uint64_t b = 0;
    unsigned __int128 P_b = 1;               // may be large; factorization is authoritative
    std::vector<std::uint64_t> factorization; // primes with multiplicity, ascending
    bool is_square_witness = false;
    bool within_value_bound = true;          // P_b < q^{2 K1}
};

struct NotReachableError : std::runtime_error {
    NotReachableError(std::string msg, unsigned depth, std::uint64_t covered_)
        : std::runtime_error(std::move(msg)), depth_reached(depth),
          covered(covered_) {}
    unsigned depth_reached = 0;
    std::uint64_t covered = 0;  // residues reached within the depth budget
};

/// BFS representative P_b = product of primes < X with P_b = b (mod q),
/// depth <= K2 per factor chain; quadratic residues get squared witnesses.
Representative find_representative(std::uint64_t b, std::uint64_t q,
                                   std::uint64_t X, unsigned K1, unsigned K2);

std::string cover_curve_csv(const CoverState& st);
std::string cover_witness_lines(const CoverState& st);

}  // namespace gausslab
