#include "gausslab/lfunc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gausslab {

CharSumTable char_partial_sums(std::uint64_t N) {
    if (N < 3 || N > 10000000 || !is_prime(N))
        throw std::domain_error("char_partial_sums: N must be an odd prime <= 1e7");
    ValueTable chi = legendre_table(N);
    CharSumTable t;
    t.N = N;
    t.partial.resize(N - 1);
    std::int32_t run = 0;
    for (std::uint64_t n = 1; n < N; ++n) {
        run += chi(n);
        t.partial[n - 1] = run;
        t.max_abs = std::max<std::uint64_t>(t.max_abs, std::abs(run));
    }
    return t;
}

double burgess_diagnostic(const CharSumTable& t, double delta) {
    if (delta <= 0.0 || delta >= 0.25)
        throw std::domain_error("burgess_diagnostic: need delta in (0, 1/4)");
    const double N = static_cast<double>(t.N);
    const auto x0 = static_cast<std::uint64_t>(std::ceil(std::pow(N, 0.25 + delta)));
    const double scale = std::pow(N, -0.5 * delta * delta);
    double best = 0.0;
    for (std::uint64_t X = std::max<std::uint64_t>(1, x0); X < t.N; ++X) {
        double v = std::abs(static_cast<double>(t.T(X))) /
                   (static_cast<double>(X) * scale);
        best = std::max(best, v);
    }
    return best;
}

namespace {

// B_{2j}/(2j)! for j = 1..8
constexpr double kBernFact[8] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    7.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

constexpr unsigned kDirectTerms = 32;  // Euler-Maclaurin cutoff M

/// Tail of zeta(s, w) past the first M terms, with the a-independent pole
/// constant 1/(s-1) dropped (it cancels over a non-principal character).
double hurwitz_tail(double s, double W) {
    const double logW = std::log(W);
    double pole;
    if (s == 1.0) {
        pole = -logW;  // lim of (W^{1-s} - 1)/(s-1)
    } else {
        pole = std::expm1((1.0 - s) * logW) / (s - 1.0);
    }
    const double Wms = std::exp(-s * logW);
    double tail = pole + 0.5 * Wms;
    double pochhammer = s;       // s (s+1) ... (s + 2j - 2)
    double Wpow = Wms / W;       // W^{-s - (2j - 1)}
    for (int j = 0; j < 8; ++j) {
        tail += kBernFact[j] * pochhammer * Wpow;
        pochhammer *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        Wpow /= W * W;
    }
    return tail;
}

}  // namespace

LValueEvaluator::LValueEvaluator(std::uint64_t N) : N_(N) {
    if (N < 3 || !is_prime(N))
        throw std::domain_error("LValueEvaluator: N must be an odd prime");
    ValueTable chi = legendre_table(N);
    chi_ = chi.values;
    if (N <= 200000) {  // log grid cache: <= ~50 MB, larger N recompute per call
        log_grid_.reserve((N - 1) * kDirectTerms);
        for (std::uint64_t a = 1; a < N; ++a)
            for (unsigned k = 0; k < kDirectTerms; ++k)
                log_grid_.push_back(std::log(
                    static_cast<double>(k) +
                    static_cast<double>(a) / static_cast<double>(N)));
    }
}

double LValueEvaluator::operator()(double s) const {
    if (s <= 0.05 || s > 64.0)
        throw std::domain_error("l_value: s must lie in (0.05, 64]");
    const double N = static_cast<double>(N_);
    double acc = 0.0;
    if (!log_grid_.empty()) {
        std::size_t idx = 0;
        for (std::uint64_t a = 1; a < N_; ++a) {
            const int c = chi_[a - 1];
            double direct = 0.0;
            for (unsigned k = 0; k < kDirectTerms; ++k)
                direct += std::exp(-s * log_grid_[idx++]);
            const double W = static_cast<double>(kDirectTerms) +
                             static_cast<double>(a) / N;
            acc += c * (direct + hurwitz_tail(s, W));
        }
    } else {
        for (std::uint64_t a = 1; a < N_; ++a) {
            const int c = chi_[a - 1];
            const double w = static_cast<double>(a) / N;
            double direct = 0.0;
            for (unsigned k = 0; k < kDirectTerms; ++k)
                direct += std::pow(static_cast<double>(k) + w, -s);
            acc += c * (direct + hurwitz_tail(s, static_cast<double>(kDirectTerms) + w));
        }
    }
    return std::exp(-s * std::log(N)) * acc;
}

double l_value(const LValueQuery& q) {
    LValueEvaluator ev(q.N);
    return ev(q.s);
}

std::vector<RealZero> real_zero_scan(std::uint64_t N, double sigma_min) {
    if (sigma_min < 0.5 || sigma_min >= 1.0)
        throw std::domain_error("real_zero_scan: need 0.5 <= sigma_min < 1");
    LValueEvaluator ev(N);
    const double step = 1e-3;
    std::vector<double> grid;
    for (double s = sigma_min; s < 1.0; s += step) grid.push_back(s);
    grid.push_back(1.0);

    std::vector<RealZero> zeros;
    double prev_s = grid[0];
    double prev_v = ev(prev_s);
    const double logN = std::log(static_cast<double>(N));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        double s = grid[i];
        double v = ev(s);
        if (prev_v == 0.0 || (prev_v < 0.0) != (v < 0.0)) {
            double lo = prev_s, hi = s, flo = prev_v;
            while (hi - lo > 1e-8) {
                double mid = 0.5 * (lo + hi);
                double fm = ev(mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if ((fm < 0.0) == (flo < 0.0)) { lo = mid; flo = fm; }
                else hi = mid;
            }
            RealZero z;
            z.beta = 0.5 * (lo + hi);
            z.one_minus_beta_log_N = (1.0 - z.beta) * logN;
            zeros.push_back(z);
        }
        prev_s = s;
        prev_v = v;
    }
    return zeros;
}

ChiPrimeSum chi_prime_sum(std::uint64_t N) {
    if (N < 3 || N > 10000000 || !is_prime(N))
        throw std::domain_error("chi_prime_sum: N must be an odd prime <= 1e7");
    ChiPrimeSum r;
    double euler_log = 0.0;
    for (std::uint64_t p : sieve_primes(N - 1).primes) {
        const int c = legendre_symbol(static_cast<std::int64_t>(p), N);
        const double invp = 1.0 / static_cast<double>(p);
        r.sum += c * invp;
        euler_log -= std::log1p(-c * invp);
    }
    r.euler_L1 = std::exp(euler_log);
    r.direct_L1 = l_value({N, 1.0});
    return r;
}

CorollaryRow corollary_row(std::uint64_t N, double sigma_min) {
    CorollaryRow row;
    row.N = N;
    ValueTable lam = mf_table(MultiplicativeFunctionSpec::liouville(), N);
    ValueTable chi = legendre_table(N);
    std::int64_t s = 0;
    for (std::uint64_t n = 1; n < N; ++n) s += lam(n) * chi(n);
    row.lambda_chi_mean = static_cast<double>(s) / static_cast<double>(N);

    ChiPrimeSum cps = chi_prime_sum(N);
    row.chi_prime_sum = cps.sum;
    row.L1_direct = cps.direct_L1;
    row.L1_euler = cps.euler_L1;

    auto zeros = real_zero_scan(N, sigma_min);
    row.num_real_zeros = zeros.size();
    row.min_one_minus_beta_log_N = 0.0;
    for (const auto& z : zeros)
        if (row.min_one_minus_beta_log_N == 0.0 ||
            z.one_minus_beta_log_N < row.min_one_minus_beta_log_N)
            row.min_one_minus_beta_log_N = z.one_minus_beta_log_N;
    return row;
}

std::string corollary_csv_header() {
    return "N,lambda_chi_mean,chi_prime_sum,L1_direct,L1_euler,num_real_zeros,"
           "min_one_minus_beta_log_N\n";
}

std::string corollary_csv_row(const CorollaryRow& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.N << ',' << r.lambda_chi_mean << ',' << r.chi_prime_sum << ','
       << r.L1_direct << ',' << r.L1_euler << ',' << r.num_real_zeros << ','
       << r.min_one_minus_beta_log_N << '\n';
    return os.str();
}

}  // namespace gausslab
