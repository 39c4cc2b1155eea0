#include <doctest.h>

#include <cmath>
#include <set>

#include "gausslab/arith.hpp"
#include "gausslab/friable.hpp"

using namespace gausslab;

namespace {

/// Enumeration oracle: factor every n <= x and test the window directly.
std::uint64_t brute_theta(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                          std::optional<std::uint64_t> q = {},
                          std::optional<std::uint64_t> a = {},
                          const std::function<bool(std::uint64_t)>& allowed = {}) {
    FactorTable ft(x);
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        bool ok = true;
        for (auto [p, e] : factorize(n, ft)) {
            if (p <= z || p > y || (allowed && !allowed(p))) {
                ok = false;
                break;
            }
        }
        if (ok && q && n % *q != *a) ok = false;
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("theta_count worked examples") {
    // {1, 5, 7, 25, 35, 49}
    CHECK(theta_count(100, 10, 3) == 6);
    // of those, 1 mod 3: {1, 7, 25, 49}
    CHECK(theta_count(100, 10, 3, 3, 1) == 4);
    // empty window (z = y) admits only n = 1
    CHECK(theta_count(100, 10, 10) == 1);
    CHECK(psi_count(10, 2) == 4);  // {1, 2, 4, 8}
}

TEST_CASE("psi_count matches the enumeration oracle") {
    CHECK(psi_count(100, 3) == brute_theta(100, 3, 1));
    CHECK(psi_count(100, 3) == 20);
    CHECK(psi_count(1000, 7) == brute_theta(1000, 7, 1));
    CHECK(psi_count(1, 2) == 1);
}

TEST_CASE("theta_count against the oracle across a parameter grid") {
    for (std::uint64_t x : {50ull, 997ull, 20000ull})
        for (std::uint64_t y : {5ull, 31ull, 200ull})
            for (std::uint64_t z : {1ull, 4ull, 13ull}) {
                if (z >= y) continue;
                REQUIRE(theta_count(x, y, z) == brute_theta(x, y, z));
            }
}

TEST_CASE("theta_count with residue classes partitions the friable count") {
    const std::uint64_t x = 20000, y = 100, z = 7, q = 13;
    std::uint64_t total = theta_count(x, y, z);
    std::uint64_t parts = 0;
    for (std::uint64_t a = 0; a < q; ++a) {
        std::uint64_t c = theta_count(x, y, z, q, a);
        REQUIRE(c == brute_theta(x, y, z, q, a));
        parts += c;
    }
    CHECK(parts == total);
}

TEST_CASE("prime-set restriction sandwiched between rough counts") {
    const std::uint64_t x = 10000, y = 50, z = 3;
    FriableQuery restricted;
    restricted.x = static_cast<double>(x);
    restricted.y = y;
    restricted.z = z;
    restricted.allowed = [](std::uint64_t p) { return p % 4 == 1; };
    std::uint64_t got = theta_count(restricted);
    CHECK(got == brute_theta(x, y, z, {}, {}, restricted.allowed));
    CHECK(got <= theta_count(x, y, z));
    CHECK(got >= 1);  // n = 1 always qualifies
}

TEST_CASE("theta_count monotone in the window") {
    const std::uint64_t x = 5000;
    std::uint64_t prev = 0;
    for (std::uint64_t y : {5ull, 11ull, 31ull, 101ull}) {
        std::uint64_t cur = theta_count(x, y, 2);
        REQUIRE(cur >= prev);
        prev = cur;
    }
    CHECK(theta_count(x, 101, 7) <= theta_count(x, 101, 2));
}

TEST_CASE("zeta_partial worked examples") {
    // primes in (3, 10]: 5, 7 -> (5/4)(7/6)
    CHECK(zeta_partial(1.0, 10, 3) == doctest::Approx(35.0 / 24.0).epsilon(1e-12));
    CHECK(zeta_partial(2.0, 2, 2) == 1.0);  // empty product
    CHECK(zeta_partial(2.0, 3, 1) ==
          doctest::Approx((4.0 / 3.0) * (9.0 / 8.0)).epsilon(1e-12));
}

TEST_CASE("solve_alpha residual and bracketing") {
    for (double x : {1e4, 1e6, 1e9, 1e15}) {
        auto sp = solve_alpha(x, 1000, 10);
        CHECK(std::abs(sp.residual) <= 1e-10 * std::log(x));
        CHECK(sp.alpha > 0.0);
        CHECK(sp.alpha < 1.5);
    }
    CHECK_THROWS_AS(solve_alpha(2.0, 10, 10), std::domain_error);  // no primes
}

TEST_CASE("alpha decreases as x grows") {
    double prev = 2.0;
    for (double x : {1e3, 1e5, 1e8, 1e12}) {
        double a = solve_alpha(x, 500, 5).alpha;
        REQUIRE(a < prev);
        prev = a;
    }
}

TEST_CASE("alpha = 1 exactly when log x equals the p - 1 sum") {
    const std::uint64_t y = 100, z = 3;
    double target = 0.0;
    for (std::uint64_t p : sieve_primes(y).primes)
        if (p > z) target += std::log(static_cast<double>(p)) /
                             (static_cast<double>(p) - 1.0);
    auto sp = solve_alpha(std::exp(target), y, z);
    CHECK(sp.alpha == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("saias_compare smoke: estimate within a broad constant of brute") {
    auto c = saias_compare(1000000, 100, 10);
    CHECK(c.brute == theta_count(1000000, 100, 10));
    CHECK(c.ratio == doctest::Approx(static_cast<double>(c.brute) / c.estimate));
    CHECK(c.ratio > 0.1);
    CHECK(c.ratio < 10.0);
}

TEST_CASE("equidistribution_report invariants at modest size") {
    auto r = equidistribution_report(100000, 100, 7, 97);
    CHECK(r.partition_exact);
    CHECK(r.total == theta_count(100000, 100, 7));
    std::uint64_t s = 0;
    for (auto c : r.counts) s += c;
    CHECK(s == r.total);
    CHECK(r.q_le_y);  // 97 <= 100, so multiples of 97 land in the a = 0 bucket
    CHECK(r.counts[0] >= 1);
    CHECK(r.min_count <= r.max_count);
    CHECK(r.mean == doctest::Approx(static_cast<double>(r.total - r.counts[0]) /
                                    96.0));
}

TEST_CASE("friable CSV schemas") {
    auto c = saias_compare(10000, 50, 5);
    CHECK(saias_csv_header() ==
          std::string("x,y,z,alpha,residual,brute,estimate,ratio\n"));
    auto row = saias_csv_row(10000, 50, 5, c);
    CHECK(row.rfind("10000,50,5,", 0) == 0);
    auto r = equidistribution_report(10000, 50, 5, 13);
    auto csv = equidistribution_csv(r);
    CHECK(csv.rfind("a,count\n", 0) == 0);
}

TEST_CASE("FriableQuery u, v, w") {
    FriableQuery fq;
    fq.x = 1e6;
    fq.y = 100;
    fq.z = 10;
    fq.q = 1000;
    CHECK(fq.u() == doctest::Approx(3.0));
    CHECK(fq.v() == doctest::Approx(6.0));
    CHECK(fq.w() == doctest::Approx(2.0));
}
