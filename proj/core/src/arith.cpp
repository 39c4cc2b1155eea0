#include "gausslab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gausslab {

PrimeTable sieve_primes(std::uint64_t limit) {
    PrimeTable t;
    t.limit = limit;
    if (limit < 2) return t;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (!composite[n]) t.primes.push_back(n);
    return t;
}

FactorTable::FactorTable(std::uint64_t limit_) : limit(limit_) {
    if (limit > (std::uint64_t(1) << 32))
        throw std::length_error("FactorTable limit too large");
    spf.assign(limit + 1, 0);
    if (limit >= 1) spf[1] = 1;
    std::vector<std::uint32_t> primes;
    // linear sieve: each n is struck exactly once by its smallest prime factor
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (spf[n] == 0) {
            spf[n] = static_cast<std::uint32_t>(n);
            primes.push_back(static_cast<std::uint32_t>(n));
        }
        for (std::uint32_t p : primes) {
            if (p > spf[n] || n * p > limit) break;
            spf[n * p] = p;
        }
    }
}

std::vector<std::pair<std::uint64_t, std::uint32_t>>
factorize(std::uint64_t n, const FactorTable& t) {
    if (n < 1 || n > t.limit)
        throw std::out_of_range("factorize: n outside table range");
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    while (n > 1) {
        std::uint64_t p = t.spf[n];
        std::uint32_t e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    return out;
}

std::uint32_t omega(std::uint64_t n, const FactorTable& t) {
    if (n < 1 || n > t.limit)
        throw std::out_of_range("omega: n outside table range");
    std::uint32_t total = 0;
    while (n > 1) { n /= t.spf[n]; ++total; }
    return total;
}

std::uint64_t largest_prime_factor(std::uint64_t n, const FactorTable& t) {
    if (n < 1 || n > t.limit)
        throw std::out_of_range("largest_prime_factor: n outside table range");
    std::uint64_t best = 1;
    while (n > 1) {
        best = std::max<std::uint64_t>(best, t.spf[n]);
        n /= t.spf[n];
    }
    return best;
}

std::uint64_t smallest_prime_factor(std::uint64_t n, const FactorTable& t) {
    if (n < 1 || n > t.limit)
        throw std::out_of_range("smallest_prime_factor: n outside table range");
    return n == 1 ? 1 : t.spf[n];
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    return pow_mod(a % m, m - 2, m);
}

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t q) {
    a %= q;
    if (a == 0) return 0;
    if (legendre_symbol(static_cast<std::int64_t>(a), q) != 1)
        throw std::domain_error("sqrt_mod: not a quadratic residue");
    if (q % 4 == 3) return pow_mod(a, (q + 1) / 4, q);
    // Tonelli-Shanks
    std::uint64_t s = 0, d = q - 1;
    while (d % 2 == 0) { d /= 2; ++s; }
    std::uint64_t z = 2;
    while (legendre_symbol(static_cast<std::int64_t>(z), q) != -1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, d, q);
    std::uint64_t t = pow_mod(a, d, q);
    std::uint64_t r = pow_mod(a, (d + 1) / 2, q);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mul_mod(tt, tt, q); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, q);
        m = i;
        c = mul_mod(b, b, q);
        t = mul_mod(t, c, q);
        r = mul_mod(r, b, q);
    }
    return r;
}

int legendre_symbol(std::int64_t n, std::uint64_t N) {
    if (N < 3 || N % 2 == 0 || !is_prime(N))
        throw std::domain_error("legendre_symbol: modulus must be an odd prime");
    std::uint64_t a = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(N)) +
                                                  static_cast<std::int64_t>(N)) %
                                                 static_cast<std::int64_t>(N));
    std::uint64_t m = N;
    int sign = 1;
    // Jacobi-style quadratic reciprocity reduction, O(log^2 N)
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::uint64_t r = m % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) sign = -sign;
        a %= m;
    }
    return m == 1 ? sign : 0;
}

MultiplicativeFunctionSpec MultiplicativeFunctionSpec::liouville() {
    MultiplicativeFunctionSpec s;
    s.kind = Kind::Liouville;
    return s;
}

MultiplicativeFunctionSpec MultiplicativeFunctionSpec::legendre() {
    MultiplicativeFunctionSpec s;
    s.kind = Kind::Legendre;
    return s;
}

MultiplicativeFunctionSpec MultiplicativeFunctionSpec::principal() {
    MultiplicativeFunctionSpec s;
    s.kind = Kind::Principal;
    return s;
}

MultiplicativeFunctionSpec
MultiplicativeFunctionSpec::flip_of_legendre(std::vector<std::uint64_t> primes) {
    return flip(legendre(), std::move(primes));
}

MultiplicativeFunctionSpec
MultiplicativeFunctionSpec::flip(MultiplicativeFunctionSpec base_,
                                 std::vector<std::uint64_t> primes) {
    MultiplicativeFunctionSpec s;
    s.kind = Kind::Flip;
    s.base = std::make_shared<const MultiplicativeFunctionSpec>(std::move(base_));
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::uint64_t p : primes)
        if (!is_prime(p))
            throw std::invalid_argument("flip set must contain only primes");
    s.flip_primes = std::move(primes);
    return s;
}

MultiplicativeFunctionSpec
MultiplicativeFunctionSpec::table(std::vector<std::int8_t> prime_values_) {
    MultiplicativeFunctionSpec s;
    s.kind = Kind::Table;
    for (std::int8_t v : prime_values_)
        if (v != 1 && v != -1)
            throw std::invalid_argument("table values must be +-1");
    s.prime_values = std::move(prime_values_);
    return s;
}

int MultiplicativeFunctionSpec::at_prime(std::uint64_t p, std::uint64_t N) const {
    switch (kind) {
        case Kind::Liouville:
            return -1;
        case Kind::Legendre: {
            int v = legendre_symbol(static_cast<std::int64_t>(p), N);
            if (v == 0)
                throw std::domain_error("legendre spec evaluated at p = N");
            return v;
        }
        case Kind::Principal:
            return 1;
        case Kind::Flip: {
            int v = base->at_prime(p, N);
            return std::binary_search(flip_primes.begin(), flip_primes.end(), p)
                       ? -v
                       : v;
        }
        case Kind::Table: {
            // k-th prime indexing; the table must reach p
            static thread_local PrimeTable cache;
            if (cache.limit < p) cache = sieve_primes(std::max<std::uint64_t>(p, 2 * cache.limit + 16));
            auto it = std::lower_bound(cache.primes.begin(), cache.primes.end(), p);
            std::size_t idx = static_cast<std::size_t>(it - cache.primes.begin());
            if (idx >= prime_values.size())
                throw std::invalid_argument(
                    "table spec has no value for prime " + std::to_string(p));
            return prime_values[idx];
        }
    }
    throw std::logic_error("unreachable");
}

int MultiplicativeFunctionSpec::evaluate(std::uint64_t n, std::uint64_t N) const {
    if (n == 0) throw std::domain_error("evaluate: n must be >= 1");
    int v = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) { n /= p; v *= at_prime(p, N); }
    }
    if (n > 1) v *= at_prime(n, N);
    return v;
}

std::string MultiplicativeFunctionSpec::to_string() const {
    switch (kind) {
        case Kind::Liouville: return "liouville";
        case Kind::Legendre: return "legendre";
        case Kind::Principal: return "principal";
        case Kind::Flip: {
            std::ostringstream os;
            os << "flip:";
            for (std::size_t i = 0; i < flip_primes.size(); ++i) {
                if (i) os << ',';
                os << flip_primes[i];
            }
            return os.str();
        }
        case Kind::Table: return "table[" + std::to_string(prime_values.size()) + "]";
    }
    return "?";
}

MultiplicativeFunctionSpec parse_function_spec(const std::string& text) {
    if (text == "liouville") return MultiplicativeFunctionSpec::liouville();
    if (text == "legendre") return MultiplicativeFunctionSpec::legendre();
    if (text == "principal") return MultiplicativeFunctionSpec::principal();
    if (text.rfind("flip:", 0) == 0) {
        std::vector<std::uint64_t> primes;
        std::stringstream ss(text.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            primes.push_back(std::stoull(item));
        }
        if (primes.empty())
            throw std::invalid_argument("flip: needs at least one prime");
        return MultiplicativeFunctionSpec::flip_of_legendre(std::move(primes));
    }
    if (text.rfind("file:", 0) == 0) {
        std::ifstream in(text.substr(5));
        if (!in)
            throw std::invalid_argument("cannot open function file " + text.substr(5));
        std::vector<std::int8_t> vals;
        long long v;
        while (in >> v) {
            if (v != 1 && v != -1)
                throw std::invalid_argument("function file entries must be +-1");
            vals.push_back(static_cast<std::int8_t>(v));
        }
        return MultiplicativeFunctionSpec::table(std::move(vals));
    }
    throw std::invalid_argument("unknown function spec: " + text);
}

namespace {

ValueTable table_from_prime_values(std::uint64_t N,
                                   const std::vector<std::int8_t>& fp,
                                   std::string id) {
    // fp[p] for prime p < N; extended multiplicatively via spf recursion
    FactorTable ft(N >= 2 ? N - 1 : 1);
    ValueTable t;
    t.N = N;
    t.function_id = std::move(id);
    t.values.assign(N - 1, 1);
    for (std::uint64_t n = 2; n < N; ++n) {
        std::uint64_t p = ft.spf[n];
        t.values[n - 1] = static_cast<std::int8_t>(fp[p] * t.values[n / p - 1]);
    }
    return t;
}

}  // namespace

ValueTable mf_table(const MultiplicativeFunctionSpec& spec, std::uint64_t N) {
    if (!is_prime(N))
        throw std::domain_error("mf_table: modulus must be prime");
    if (N == 2) {
        ValueTable t;
        t.N = 2;
        t.values = {1};
        t.function_id = spec.to_string();
        return t;
    }
    std::vector<std::int8_t> fp(N, 1);
    PrimeTable pt = sieve_primes(N - 1);
    for (std::uint64_t p : pt.primes)
        fp[p] = static_cast<std::int8_t>(spec.at_prime(p, N));
    return table_from_prime_values(N, fp, spec.to_string());
}

ValueTable legendre_table(std::uint64_t N) {
    return mf_table(MultiplicativeFunctionSpec::legendre(), N);
}

}  // namespace gausslab
