#include "gausslab/proximity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gausslab {

std::uint64_t distance_count(const ValueTable& f, const ValueTable& psi) {
    if (f.N != psi.N)
        throw std::invalid_argument("distance_count: mismatched moduli");
    std::uint64_t d = 0;
    for (std::uint64_t n = 1; n < f.N; ++n)
        if (f(n) != psi(n)) ++d;
    return d;
}

DistanceReport prime_distance(const ValueTable& f, const ValueTable& psi,
                              const ProximityConfig& cfg) {
    if (f.N != psi.N)
        throw std::invalid_argument("prime_distance: mismatched moduli");
    const std::uint64_t N = f.N;
    DistanceReport r;
    r.N = N;
    r.f_id = f.function_id;
    r.psi_id = psi.function_id;
    r.distance = distance_count(f, psi);
    r.mean_fpsi =
        1.0 - 2.0 * static_cast<double>(r.distance) / static_cast<double>(N - 1);

    PrimeTable pt = sieve_primes(N);  // p <= N for the HT exponent, p < N for both sums
    double pdist = 0.0, ht_exp = 0.0;
    for (std::uint64_t p : pt.primes) {
        if (p < N) {
            const int fp = f(p), gp = psi(p);
            if (fp != gp) pdist += 1.0 / static_cast<double>(p);
            ht_exp += (1.0 - static_cast<double>(fp * gp)) / static_cast<double>(p);
        }
    }
    r.prime_distance = pdist;
    r.ht_bound = static_cast<double>(N) * std::exp(-cfg.kappa * ht_exp);
    return r;
}

double mean_value(const ValueTable& f) {
    std::int64_t s = 0;
    for (std::uint64_t n = 1; n < f.N; ++n) s += f(n);
    return static_cast<double>(s) / static_cast<double>(f.N);
}

bool mean_below_spectrum_threshold(const ValueTable& f,
                                   const ProximityConfig& cfg) {
    return mean_value(f) < cfg.delta1_threshold;
}

BestCharacter best_real_character(const ValueTable& f) {
    const std::uint64_t N = f.N;
    ValueTable chi = legendre_table(N);
    std::int64_t with_principal = 0, with_legendre = 0;
    for (std::uint64_t n = 1; n < N; ++n) {
        with_principal += f(n);
        with_legendre += f(n) * chi(n);
    }
    BestCharacter b;
    if (with_legendre > with_principal) {
        b.which = RealCharacter::Legendre;
        b.correlation = static_cast<double>(with_legendre) / static_cast<double>(N);
    } else {
        b.which = RealCharacter::Principal;
        b.correlation = static_cast<double>(with_principal) / static_cast<double>(N);
    }
    return b;
}

std::string distance_csv_header() {
    return "N,function,psi,distance,mean,prime_distance,ht_bound\n";
}

namespace {

// flip specs carry commas; RFC 4180 quoting keeps the column count stable
std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return '"' + s + '"';
}

}  // namespace

std::string distance_csv_row(const DistanceReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.N << ',' << csv_field(r.f_id) << ',' << csv_field(r.psi_id) << ','
       << r.distance << ',' << r.mean_fpsi << ',' << r.prime_distance << ','
       << r.ht_bound << '\n';
    return os.str();
}

}  // namespace gausslab
