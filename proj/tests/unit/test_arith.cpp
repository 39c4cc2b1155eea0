#include <doctest.h>

#include <random>
#include <set>

#include "gausslab/arith.hpp"

using namespace gausslab;

TEST_CASE("sieve_primes basics") {
    CHECK(sieve_primes(10).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2).primes == std::vector<std::uint64_t>{2});
    CHECK(sieve_primes(1).primes.empty());
    CHECK(sieve_primes(0).primes.empty());

    auto t = sieve_primes(10000);
    CHECK(t.primes.size() == 1229);
    for (std::size_t i = 1; i < t.primes.size(); ++i)
        REQUIRE(t.primes[i] > t.primes[i - 1]);
}

TEST_CASE("factorize and Omega conventions") {
    FactorTable t(1000);
    CHECK(factorize(12, t) ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 1}});
    CHECK(factorize(1, t).empty());
    CHECK(factorize(97, t) ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{97, 1}});
    CHECK(omega(1, t) == 0);
    CHECK(omega(12, t) == 3);
    CHECK(largest_prime_factor(1, t) == 1);
    CHECK(smallest_prime_factor(1, t) == 1);
    CHECK(largest_prime_factor(12, t) == 3);
    CHECK(smallest_prime_factor(12, t) == 2);
    CHECK_THROWS_AS(factorize(1001, t), std::out_of_range);
    CHECK_THROWS_AS(factorize(0, t), std::out_of_range);

    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::uint64_t prod = 1;
        for (auto [p, e] : factorize(n, t))
            for (std::uint32_t i = 0; i < e; ++i) prod *= p;
        REQUIRE(prod == n);
    }
}

TEST_CASE("legendre_symbol spot values") {
    CHECK(legendre_symbol(2, 7) == 1);   // squares mod 7: {1,2,4}
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(legendre_symbol(14, 7) == 0);
    CHECK(legendre_symbol(-1, 5) == 1);  // 4 is a square mod 5
    CHECK_THROWS_AS(legendre_symbol(3, 8), std::domain_error);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::domain_error);
    CHECK_THROWS_AS(legendre_symbol(3, 15), std::domain_error);
}

TEST_CASE("legendre_symbol agrees with exhaustive square enumeration, N <= 1000") {
    for (std::uint64_t N : sieve_primes(1000).primes) {
        if (N == 2) continue;
        std::set<std::uint64_t> squares;
        for (std::uint64_t s = 1; s < N; ++s) squares.insert(s * s % N);
        for (std::uint64_t n = 0; n < N; ++n) {
            int expected = n == 0 ? 0 : (squares.count(n) ? 1 : -1);
            REQUIRE(legendre_symbol(static_cast<std::int64_t>(n), N) == expected);
        }
    }
}

TEST_CASE("Euler criterion, N <= 10^4") {
    for (std::uint64_t N : sieve_primes(10000).primes) {
        if (N == 2) continue;
        for (std::uint64_t n = 1; n < N; n += 1 + N / 37) {  // stride keeps runtime sane
            std::uint64_t e = pow_mod(n, (N - 1) / 2, N);
            int val = e == 1 ? 1 : -1;
            REQUIRE((e == 1 || e == N - 1));
            REQUIRE(legendre_symbol(static_cast<std::int64_t>(n), N) == val);
        }
    }
}

TEST_CASE("sqrt_mod returns square roots") {
    for (std::uint64_t q : {5ull, 7ull, 13ull, 17ull, 97ull, 10007ull}) {
        for (std::uint64_t b = 1; b < std::min<std::uint64_t>(q, 60); ++b) {
            if (legendre_symbol(static_cast<std::int64_t>(b), q) != 1) continue;
            std::uint64_t r = sqrt_mod(b, q);
            REQUIRE(mul_mod(r, r, q) == b % q);
        }
    }
}

TEST_CASE("mf_table examples") {
    auto lam = mf_table(MultiplicativeFunctionSpec::liouville(), 5);
    CHECK(lam.values == std::vector<std::int8_t>{1, -1, -1, 1});

    auto chi5 = mf_table(MultiplicativeFunctionSpec::legendre(), 5);
    CHECK(chi5.values == std::vector<std::int8_t>{1, -1, -1, 1});

    auto f = mf_table(MultiplicativeFunctionSpec::flip_of_legendre({2}), 7);
    auto chi7 = mf_table(MultiplicativeFunctionSpec::legendre(), 7);
    CHECK(f(4) == chi7(4));  // squares erase a flip
    CHECK(f(2) == -chi7(2));

    CHECK_THROWS_AS(mf_table(MultiplicativeFunctionSpec::liouville(), 15),
                    std::domain_error);
}

TEST_CASE("complete multiplicativity on random pairs") {
    std::mt19937_64 rng(7);
    const std::uint64_t N = 10007;
    for (auto spec : {MultiplicativeFunctionSpec::liouville(),
                      MultiplicativeFunctionSpec::legendre(),
                      MultiplicativeFunctionSpec::flip_of_legendre({3, 11})}) {
        auto t = mf_table(spec, N);
        std::uniform_int_distribution<std::uint64_t> dist(1, 100);
        for (int i = 0; i < 500; ++i) {
            std::uint64_t m = dist(rng), n = dist(rng);
            if (m * n >= N) continue;
            REQUIRE(t(m * n) == t(m) * t(n));
        }
    }
}

TEST_CASE("flip identity: f(n) = chi(n) (-1)^{Omega_B(n)}") {
    const std::uint64_t N = 211;
    std::vector<std::uint64_t> B{2, 13};
    auto f = mf_table(MultiplicativeFunctionSpec::flip_of_legendre(B), N);
    auto chi = mf_table(MultiplicativeFunctionSpec::legendre(), N);
    FactorTable ft(N - 1);
    for (std::uint64_t n = 1; n < N; ++n) {
        std::uint32_t omega_b = 0;
        for (auto [p, e] : factorize(n, ft))
            if (p == 2 || p == 13) omega_b += e;
        int sign = omega_b % 2 ? -1 : 1;
        REQUIRE(f(n) == chi(n) * sign);
    }
}

TEST_CASE("spec evaluation beyond N matches table within N") {
    const std::uint64_t N = 101;
    auto spec = MultiplicativeFunctionSpec::flip_of_legendre({5});
    auto t = mf_table(spec, N);
    for (std::uint64_t n = 1; n < N; ++n) REQUIRE(spec.evaluate(n, N) == t(n));
    // large square arguments stay +1 under any +-1 completely multiplicative g
    CHECK(spec.evaluate(9 * 9, N) == 1);
}

TEST_CASE("function spec grammar") {
    CHECK(parse_function_spec("liouville").kind ==
          MultiplicativeFunctionSpec::Kind::Liouville);
    CHECK(parse_function_spec("legendre").kind ==
          MultiplicativeFunctionSpec::Kind::Legendre);
    CHECK(parse_function_spec("principal").kind ==
          MultiplicativeFunctionSpec::Kind::Principal);
    auto f = parse_function_spec("flip:2,13,101");
    CHECK(f.kind == MultiplicativeFunctionSpec::Kind::Flip);
    CHECK(f.flip_primes == std::vector<std::uint64_t>{2, 13, 101});
    CHECK(f.to_string() == "flip:2,13,101");
    CHECK_THROWS_AS(parse_function_spec("flip:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec("nonsense"), std::invalid_argument);
}
