#include "gausslab/friable.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gausslab/arith.hpp"

namespace gausslab {

double FriableQuery::u() const { return std::log(x) / std::log(static_cast<double>(y)); }
double FriableQuery::v() const { return std::log(x) / std::log(static_cast<double>(z)); }
double FriableQuery::w() const {
    return q ? std::log(x) / std::log(static_cast<double>(*q)) : 0.0;
}

namespace {

constexpr std::uint64_t kXGuard = 100000000;  // 1e8
constexpr std::uint64_t kSegment = 1 << 20;

/// Runs visit(n) for every n <= x whose prime factors all lie in
/// (z, y] intersected with `allowed`. n = 1 always visits.
template <typename Visit>
void friable_rough_scan(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                        const std::function<bool(std::uint64_t)>& allowed,
                        Visit&& visit) {
    if (x > kXGuard) throw std::length_error("theta_count: x above 1e8 guard");
    if (z > y) throw std::invalid_argument("theta_count: need z <= y");
    if (x == 0) return;

    // dividing out primes <= sqrt(x) leaves rem = 1 or one prime > sqrt(x)
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while ((root + 1) * (root + 1) <= x) ++root;
    while (root * root > x) --root;
    PrimeTable small = sieve_primes(root);

    // classify once: a prime is admissible iff z < p <= y and allowed(p)
    auto admissible = [&](std::uint64_t p) {
        return p > z && p <= y && (!allowed || allowed(p));
    };

    std::vector<std::uint64_t> rem(kSegment);
    std::vector<std::uint8_t> bad(kSegment);
    for (std::uint64_t lo = 1; lo <= x; lo += kSegment) {
        const std::uint64_t hi = std::min(x, lo + kSegment - 1);
        const std::uint64_t len = hi - lo + 1;
        for (std::uint64_t i = 0; i < len; ++i) { rem[i] = lo + i; bad[i] = 0; }
        for (std::uint64_t p : small.primes) {
            const bool ok = admissible(p);
            std::uint64_t first = ((lo + p - 1) / p) * p;
            for (std::uint64_t n = first; n <= hi; n += p) {
                std::uint64_t i = n - lo;
                do { rem[i] /= p; } while (rem[i] % p == 0);
                if (!ok) bad[i] = 1;
            }
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            if (bad[i]) continue;
            std::uint64_t r = rem[i];
            if (r != 1 && !admissible(r)) continue;  // leftover prime > sqrt(x)
            visit(lo + i);
        }
    }
}

}  // namespace

std::uint64_t theta_count(const FriableQuery& fq) {
    if (fq.x < 0 || fq.x > static_cast<double>(kXGuard))
        throw std::length_error("theta_count: x above 1e8 guard");
    const std::uint64_t x = static_cast<std::uint64_t>(fq.x);
    std::uint64_t count = 0;
    if (fq.q) {
        const std::uint64_t q = *fq.q;
        const std::uint64_t a = fq.a.value_or(0) % q;
        friable_rough_scan(x, fq.y, fq.z, fq.allowed, [&](std::uint64_t n) {
            if (n % q == a) ++count;
        });
    } else {
        friable_rough_scan(x, fq.y, fq.z, fq.allowed,
                           [&](std::uint64_t) { ++count; });
    }
    return count;
}

std::uint64_t theta_count(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    FriableQuery fq;
    fq.x = static_cast<double>(x);
    fq.y = y;
    fq.z = z;
    return theta_count(fq);
}

std::uint64_t theta_count(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                          std::uint64_t q, std::uint64_t a) {
    FriableQuery fq;
    fq.x = static_cast<double>(x);
    fq.y = y;
    fq.z = z;
    fq.q = q;
    fq.a = a;
    return theta_count(fq);
}

std::uint64_t psi_count(std::uint64_t x, std::uint64_t y) {
    return theta_count(x, y, 1);
}

SaddlePoint solve_alpha(double x, std::uint64_t y, std::uint64_t z) {
    if (!(x > 1.0)) throw std::domain_error("solve_alpha: need x > 1");
    if (z > y) throw std::invalid_argument("solve_alpha: need z <= y");
    PrimeTable pt = sieve_primes(y);
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p : pt.primes)
        if (p > z) ps.push_back(p);
    if (ps.empty())
        throw std::domain_error("solve_alpha: no primes in (z, y]");

    const double target = std::log(x);
    auto g = [&](double sigma) {
        double s = 0.0;
        for (std::uint64_t p : ps) {
            double lp = std::log(static_cast<double>(p));
            s += lp / std::expm1(sigma * lp);
        }
        return s - target;
    };
    auto gprime = [&](double sigma) {
        double s = 0.0;
        for (std::uint64_t p : ps) {
            double lp = std::log(static_cast<double>(p));
            double e = std::expm1(sigma * lp);
            s -= lp * lp * (e + 1.0) / (e * e);
        }
        return s;
    };

    SaddlePoint sp;
    double lo = 0.05, hi = 1.5;
    // g is strictly decreasing; widen the bracket if the root escapes it
    while (g(lo) < 0.0 && lo > 1e-9) lo *= 0.5;
    while (g(hi) > 0.0 && hi < 64.0) hi *= 2.0;
    for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) lo = mid; else hi = mid;
        ++sp.iterations;
    }
    double sigma = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        double val = g(sigma);
        sp.residual = std::abs(val);
        if (sp.residual <= 1e-12 * target) break;
        double step = val / gprime(sigma);
        double next = sigma - step;
        if (next <= 0.0) next = 0.5 * sigma;
        sigma = next;
        ++sp.iterations;
    }
    sp.alpha = sigma;
    sp.residual = std::abs(g(sigma));
    if (sp.residual > 1e-10 * target)
        throw std::runtime_error("solve_alpha: did not converge");
    return sp;
}

double zeta_partial(double sigma, std::uint64_t y, std::uint64_t z) {
    if (sigma <= 0.0) throw std::domain_error("zeta_partial: need sigma > 0");
    if (z >= y) return 1.0;
    double prod = 1.0;
    for (std::uint64_t p : sieve_primes(y).primes)
        if (p > z)
            prod /= -std::expm1(-sigma * std::log(static_cast<double>(p)));
    return prod;
}

SaiasComparison saias_compare(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    SaiasComparison c;
    c.brute = theta_count(x, y, z);
    c.saddle = solve_alpha(static_cast<double>(x), y, z);
    const double lx = std::log(static_cast<double>(x));
    const double ly = std::log(static_cast<double>(y));
    c.estimate = std::exp(c.saddle.alpha * lx) *
                 zeta_partial(c.saddle.alpha, y, z) / std::sqrt(lx * ly);
    c.ratio = static_cast<double>(c.brute) / c.estimate;
    return c;
}

EquidistributionReport equidistribution_report(std::uint64_t x, std::uint64_t y,
                                               std::uint64_t z, std::uint64_t q) {
    if (!is_prime(q))
        throw std::domain_error("equidistribution_report: q must be prime");
    EquidistributionReport r;
    r.x = x;
    r.y = y;
    r.z = z;
    r.q = q;
    r.q_le_y = q <= y;
    r.counts.assign(q, 0);
    friable_rough_scan(x, y, z, nullptr,
                       [&](std::uint64_t n) { ++r.counts[n % q]; });
    r.total = theta_count(x, y, z);

    std::uint64_t sum = 0;
    r.min_count = UINT64_MAX;
    r.max_count = 0;
    for (std::uint64_t a = 0; a < q; ++a) {
        sum += r.counts[a];
        if (a == 0) continue;
        r.min_count = std::min(r.min_count, r.counts[a]);
        r.max_count = std::max(r.max_count, r.counts[a]);
    }
    r.partition_exact = sum == r.total;
    r.mean = static_cast<double>(r.total - r.counts[0]) /
             static_cast<double>(q - 1);
    r.relative_spread =
        r.mean > 0.0
            ? static_cast<double>(r.max_count - r.min_count) / r.mean
            : 0.0;
    return r;
}

std::string equidistribution_csv(const EquidistributionReport& r) {
    std::ostringstream os;
    os << "a,count\n";
    for (std::uint64_t a = 0; a < r.q; ++a)
        os << a << ',' << r.counts[a] << '\n';
    return os.str();
}

std::string saias_csv_header() {
    return "x,y,z,alpha,residual,brute,estimate,ratio\n";
}

std::string saias_csv_row(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                          const SaiasComparison& c) {
    std::ostringstream os;
    os.precision(17);
    os << x << ',' << y << ',' << z << ',' << c.saddle.alpha << ','
       << c.saddle.residual << ',' << c.brute << ',' << c.estimate << ','
       << c.ratio << '\n';
    return os.str();
}

}  // namespace gausslab
