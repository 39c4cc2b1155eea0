#include <doctest.h>

#include <random>
#include <set>

#include "gausslab/cover.hpp"

using namespace gausslab;

namespace {

std::set<std::uint64_t> to_set(const ResidueSet& s) {
    auto e = s.elements();
    return {e.begin(), e.end()};
}

/// Exhaustive set-product oracle for level k+1 from level k.
std::set<std::uint64_t> brute_next_level(const std::set<std::uint64_t>& prev,
                                         const std::vector<std::uint64_t>& primes,
                                         std::uint64_t q) {
    std::set<std::uint64_t> next;
    for (std::uint64_t s : prev)
        for (std::uint64_t p : primes) next.insert(s * (p % q) % q);
    return next;
}

}  // namespace

TEST_CASE("product_levels worked example q=7, X=4") {
    auto st = product_levels(7, 4, 3);
    REQUIRE(st.primes == std::vector<std::uint64_t>{2, 3});
    CHECK(to_set(st.levels[0]) == std::set<std::uint64_t>{2, 3});
    CHECK(to_set(st.levels[1]) == std::set<std::uint64_t>{2, 4, 6});
    CHECK(to_set(st.levels[2]) == std::set<std::uint64_t>{1, 4, 5, 6});
    CHECK(minimal_cover_k(st) == 3);
}

TEST_CASE("product_levels powers-of-two example q=5, X=3") {
    auto st = product_levels(5, 3, 5);
    CHECK(to_set(st.levels[0]) == std::set<std::uint64_t>{2});
    CHECK(to_set(st.levels[1]) == std::set<std::uint64_t>{4});
    CHECK(to_set(st.levels[2]) == std::set<std::uint64_t>{3});
    CHECK(to_set(st.levels[3]) == std::set<std::uint64_t>{1});
    CHECK(to_set(st.levels[4]) == std::set<std::uint64_t>{2});  // cyclic
    CHECK(minimal_cover_k(5, 3, 6) == 4);
}

TEST_CASE("no primes below X") {
    auto st = product_levels(7, 2, 3);
    CHECK(st.no_primes);
    for (const auto& lvl : st.levels) CHECK(lvl.count() == 0);
    CHECK(!minimal_cover_k(7, 2, 5).has_value());
}

TEST_CASE("level recurrence matches the exhaustive product oracle") {
    std::mt19937_64 rng(31);
    for (std::uint64_t q : {7ull, 101ull, 499ull, 997ull}) {
        for (std::uint64_t X : {3ull, 14ull, 48ull}) {
            auto st = product_levels(q, X, 6);
            if (st.no_primes) continue;
            std::set<std::uint64_t> cur = to_set(st.levels[0]);
            std::set<std::uint64_t> prev_cumulative;
            for (std::size_t k = 0; k < 6; ++k) {
                REQUIRE(to_set(st.levels[k]) == cur);
                auto cum = to_set(st.cumulative[k]);
                // monotone coverage
                for (std::uint64_t r : prev_cumulative) REQUIRE(cum.count(r));
                prev_cumulative = cum;
                cur = brute_next_level(cur, st.primes, q);
            }
        }
    }
}

TEST_CASE("witness soundness: re-multiply, prime bound, first-level depth") {
    for (std::uint64_t q : {101ull, 997ull}) {
        const std::uint64_t X = 20;
        auto st = product_levels(q, X, 8);
        for (std::uint64_t b = 1; b < q; ++b) {
            if (!st.covered(b)) continue;
            auto fac = st.witness_factorization(b);
            REQUIRE(!fac.empty());
            REQUIRE(fac.size() <= st.first_level[b]);
            std::uint64_t prod = 1;
            for (std::uint64_t p : fac) {
                REQUIRE(p < X);
                REQUIRE(is_prime(p));
                prod = prod * p % q;
            }
            REQUIRE(prod == b);
        }
    }
}

TEST_CASE("freiman_check multiplicative examples mod 7") {
    CHECK(freiman_check(7, {1, 3}) == FreimanResult::Grows);
    CHECK(freiman_check(7, {3}) == FreimanResult::PreconditionFailed);
    CHECK(freiman_check(7, {1, 2, 3, 4, 5, 6}) == FreimanResult::Covers);
    CHECK_THROWS_AS(freiman_check(7, {0}), std::invalid_argument);
}

TEST_CASE("freiman dichotomy holds for every subset of small cyclic groups") {
    for (std::uint64_t m = 1; m <= 12; ++m) {
        for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
            std::vector<std::uint64_t> S;
            for (std::uint64_t r = 0; r < m; ++r)
                if (mask & (1ull << r)) S.push_back(r);
            // must never throw: one branch always holds under the precondition
            auto res = freiman_check_cyclic(m, S);
            if (S.size() == m) CHECK(res == FreimanResult::Covers);
        }
    }
}

TEST_CASE("freiman dichotomy on random subsets of a larger cyclic group") {
    std::mt19937_64 rng(77);
    const std::uint64_t m = 9973;
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t size = 2 + rng() % 200;
        std::set<std::uint64_t> S;
        while (S.size() < size) S.insert(rng() % m);
        auto res = freiman_check_cyclic(m, {S.begin(), S.end()});
        CHECK(res != FreimanResult::Covers);  // sparse random sets grow
    }
}

TEST_CASE("find_representative worked examples") {
    auto r3 = find_representative(3, 7, 4, 4, 4);
    CHECK(static_cast<std::uint64_t>(r3.P_b) == 3);
    CHECK(r3.factorization == std::vector<std::uint64_t>{3});
    CHECK(!r3.is_square_witness);

    auto r2 = find_representative(2, 7, 4, 4, 4);
    CHECK(r2.is_square_witness);
    CHECK(static_cast<std::uint64_t>(r2.P_b) == 9);  // 3^2 = 9 = 2 mod 7
    CHECK(r2.factorization == std::vector<std::uint64_t>{3, 3});

    auto r1 = find_representative(1, 7, 4, 4, 4);
    CHECK(static_cast<std::uint64_t>(r1.P_b) == 1);
    CHECK(r1.factorization.empty());
}

TEST_CASE("find_representative unreachable residue carries depth info") {
    // powers of 2 mod 7 are {1,2,4}; 3 is never reached
    CHECK_THROWS_AS(find_representative(3, 7, 3, 4, 6), NotReachableError);
    try {
        find_representative(3, 7, 3, 4, 6);
    } catch (const NotReachableError& e) {
        CHECK(e.covered == 3);
        CHECK(e.depth_reached <= 6);
    }
}

TEST_CASE("square witnesses are sign-killed by any +-1 multiplicative g") {
    const std::uint64_t q = 101;
    std::vector<MultiplicativeFunctionSpec> gs{
        MultiplicativeFunctionSpec::liouville(),
        MultiplicativeFunctionSpec::legendre(),
        MultiplicativeFunctionSpec::flip_of_legendre({2, 7})};
    for (std::uint64_t b = 1; b < q; ++b) {
        if (legendre_symbol(static_cast<std::int64_t>(b), q) != 1) continue;
        auto rep = find_representative(b, q, 30, 6, 6);
        REQUIRE(rep.is_square_witness);
        std::uint64_t prod_mod = 1;
        unsigned __int128 value = 1;
        for (std::uint64_t p : rep.factorization) {
            prod_mod = mul_mod(prod_mod, p, q);
            value *= p;
        }
        REQUIRE(prod_mod == b);
        // perfect square
        REQUIRE(rep.factorization.size() % 2 == 0);
        for (const auto& g : gs) {
            int v = 1;
            for (std::uint64_t p : rep.factorization) v *= g.at_prime(p, q);
            REQUIRE(v == 1);
        }
    }
}

TEST_CASE("cover CSV schemas") {
    auto st = product_levels(7, 4, 3);
    auto csv = cover_curve_csv(st);
    CHECK(csv.rfind("k,level_size,cumulative_size,coverage_fraction\n", 0) == 0);
    CHECK(csv.find("3,4,6,1\n") != std::string::npos);
    auto wit = cover_witness_lines(st);
    CHECK(wit.find("2,2,2\n") != std::string::npos);
}
