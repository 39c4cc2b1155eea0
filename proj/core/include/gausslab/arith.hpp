#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gausslab {

/// All primes up to and including `limit`, strictly ascending.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;
};

PrimeTable sieve_primes(std::uint64_t limit);

/// Smallest-prime-factor table for [1, limit]; spf[1] = 1.
struct FactorTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;  // index n, valid for 1 <= n <= limit

    explicit FactorTable(std::uint64_t limit);
    bool is_prime(std::uint64_t n) const { return n >= 2 && spf[n] == n; }
};

/// Prime factorization of n, ascending primes. n = 1 gives the empty product.
std::vector<std::pair<std::uint64_t, std::uint32_t>>
factorize(std::uint64_t n, const FactorTable& t);

/// Number of prime factors counted with multiplicity; Omega(1) = 0.
std::uint32_t omega(std::uint64_t n, const FactorTable& t);

/// Largest / smallest prime factor, with P^+(1) = P^-(1) = 1.
std::uint64_t largest_prime_factor(std::uint64_t n, const FactorTable& t);
std::uint64_t smallest_prime_factor(std::uint64_t n, const FactorTable& t);

/// Deterministic primality test (trial division by sieved primes).
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo prime m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
/// A square root of a quadratic residue a modulo an odd prime q (Tonelli-Shanks).
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t q);

/// Legendre symbol (n/N) in {-1, 0, +1}; N must be an odd prime.
int legendre_symbol(std::int64_t n, std::uint64_t N);

/// Rule determining a +-1-valued completely multiplicative function by its
/// values on primes, interpreted relative to a prime modulus N.
struct MultiplicativeFunctionSpec {
    enum class Kind { Liouville, Legendre, Principal, Flip, Table };

    Kind kind = Kind::Liouville;
    /// Flip: base function whose sign is negated on `flip_primes`.
    std::shared_ptr<const MultiplicativeFunctionSpec> base;
    std::vector<std::uint64_t> flip_primes;  // sorted, unique
    /// Table: value at the k-th prime (2, 3, 5, ...).
    std::vector<std::int8_t> prime_values;

    static MultiplicativeFunctionSpec liouville();
    static MultiplicativeFunctionSpec legendre();
    static MultiplicativeFunctionSpec principal();
    static MultiplicativeFunctionSpec flip_of_legendre(std::vector<std::uint64_t> primes);
    static MultiplicativeFunctionSpec flip(MultiplicativeFunctionSpec base,
                                           std::vector<std::uint64_t> primes);
    static MultiplicativeFunctionSpec table(std::vector<std::int8_t> prime_values);

    /// Value at a prime p (p != N).
    int at_prime(std::uint64_t p, std::uint64_t N) const;
    /// Completely multiplicative evaluation at any n >= 1 (trial division).
    int evaluate(std::uint64_t n, std::uint64_t N) const;
    /// Compact grammar used by the CLI: liouville | legendre | principal |
    /// flip:p1,p2,... | file:<path>.
    std::string to_string() const;
};

MultiplicativeFunctionSpec parse_function_spec(const std::string& text);

/// Values f(1), ..., f(N-1) of a +-1 completely multiplicative function.
struct ValueTable {
    std::uint64_t N = 0;  // prime modulus
    std::vector<std::int8_t> values;  // values[n-1] = f(n), 1 <= n < N
    std::string function_id;

    int operator()(std::uint64_t n) const { return values[n - 1]; }
};

/// O(N) sieve evaluation of `spec` on [1, N-1]. Throws std::domain_error for
/// composite N.
ValueTable mf_table(const MultiplicativeFunctionSpec& spec, std::uint64_t N);

/// Legendre-character table via a single spf sieve (shared helper).
ValueTable legendre_table(std::uint64_t N);

}  // namespace gausslab
