#include "gausslab/rigidity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gausslab/parallel.hpp"

namespace gausslab {

std::int64_t correlation(const ValueTable& v, std::uint64_t p) {
    const std::uint64_t N = v.N;
    const std::uint64_t pr = p % N;
    if (pr == 0) throw std::domain_error("correlation: p divisible by N");
    std::int64_t c = 0;
    std::uint64_t idx = 0;  // (m*p) mod N, stepped by pr
    for (std::uint64_t m = 1; m < N; ++m) {
        idx += pr;
        if (idx >= N) idx -= N;
        c += static_cast<std::int64_t>(v.values[m - 1]) *
             static_cast<std::int64_t>(v.values[idx - 1]);
    }
    return c;
}

double deficit_spectral(const ExpSumTable& s, std::uint64_t p, int gp) {
    const std::uint64_t N = s.N;
    const std::uint64_t pr = p % N;
    if (pr == 0) throw std::domain_error("deficit: p divisible by N");
    const double g = static_cast<double>(gp);
    double total = 0.0;
    std::uint64_t idx = 0;
    for (std::uint64_t a = 0; a < N; ++a) {
        std::complex<double> d = s.entries[idx] - g * s.entries[a];
        total += std::norm(d);
        idx += pr;
        if (idx >= N) idx -= N;
    }
    return total / static_cast<double>(N);
}

double deficit_correlation(const ValueTable& v, std::uint64_t p, int gp) {
    const std::int64_t C = correlation(v, p);
    const std::int64_t N = static_cast<std::int64_t>(v.N);
    return static_cast<double>(2 * (N - 1) - 2 * static_cast<std::int64_t>(gp) * C);
}

namespace {

RigidityReport scan_impl(const ValueTable& v, const ExpSumTable* spectral,
                         double c, GMode g_mode, DeficitBackend backend,
                         unsigned threads) {
    const std::uint64_t N = v.N;
    if (c <= 0.0 || c >= 1.0)
        throw std::domain_error("rigidity_scan: need 0 < c < 1");

    RigidityReport r;
    r.N = N;
    r.c = c;
    r.g_mode = g_mode;
    r.function_id = v.function_id;

    const auto bound = static_cast<std::uint64_t>(
        std::floor(std::pow(static_cast<double>(N), c)));
    PrimeTable pt = sieve_primes(bound);
    r.records.resize(pt.primes.size());

    ValueTable chi;  // only materialized when g is read off the character
    if (g_mode == GMode::Legendre) chi = legendre_table(N);

    parallel_for(pt.primes.size(), threads, [&](std::size_t i) {
        const std::uint64_t p = pt.primes[i];
        DeficitRecord rec;
        rec.p = p;
        rec.C = correlation(v, p);
        switch (g_mode) {
            case GMode::MatchF: rec.g = v(p); break;
            case GMode::Legendre: rec.g = chi(p); break;
            case GMode::Best: rec.g = rec.C >= 0 ? 1 : -1; break;
        }
        rec.deficit = backend == DeficitBackend::Spectral
                          ? deficit_spectral(*spectral, p, rec.g)
                          : deficit_correlation(v, p, rec.g);
        r.records[i] = rec;
    });

    r.max_deficit = 0.0;
    for (const auto& rec : r.records) {
        // ties keep the smallest p
        if (rec.deficit > r.max_deficit || r.max_deficit_p == 0) {
            r.max_deficit = rec.deficit;
            r.max_deficit_p = rec.p;
        }
        if (rec.g != v(rec.p)) ++r.g_mismatch_count;
    }
    if (r.max_deficit < 1.0) {
        r.M_capped = true;
        r.inferred_M = static_cast<double>(N);
    } else {
        r.inferred_M = static_cast<double>(N) / r.max_deficit;
    }
    return r;
}

}  // namespace

RigidityReport rigidity_scan_table(const ValueTable& v, double c, GMode g_mode,
                                   DeficitBackend backend, unsigned threads) {
    if (backend == DeficitBackend::Spectral) {
        ExpSumTable s = v.N <= (std::uint64_t(1) << 16) ? dft_naive(v) : dft_fast(v);
        return scan_impl(v, &s, c, g_mode, backend, threads);
    }
    return scan_impl(v, nullptr, c, g_mode, backend, threads);
}

RigidityReport rigidity_scan(const MultiplicativeFunctionSpec& spec,
                             std::uint64_t N, double c, GMode g_mode,
                             DeficitBackend backend, unsigned threads) {
    ValueTable v = mf_table(spec, N);
    return rigidity_scan_table(v, c, g_mode, backend, threads);
}

std::string rigidity_csv(const RigidityReport& r) {
    std::ostringstream os;
    os << "p,C,deficit,g,deficit_over_N\n";
    os.precision(17);
    for (const auto& rec : r.records)
        os << rec.p << ',' << rec.C << ',' << rec.deficit << ',' << rec.g << ','
           << rec.deficit / static_cast<double>(r.N) << '\n';
    return os.str();
}

std::string rigidity_json(const RigidityReport& r) {
    nlohmann::json j;
    j["N"] = r.N;
    j["c"] = r.c;
    j["function"] = r.function_id;
    switch (r.g_mode) {
        case GMode::MatchF: j["g_mode"] = "match"; break;
        case GMode::Legendre: j["g_mode"] = "legendre"; break;
        case GMode::Best: j["g_mode"] = "best"; break;
    }
    j["max_deficit"] = r.max_deficit;
    j["max_deficit_p"] = r.max_deficit_p;
    j["inferred_M"] = r.M_capped ? nlohmann::json(">= N") : nlohmann::json(r.inferred_M);
    j["g_mismatch_count"] = r.g_mismatch_count;
    auto& recs = j["records"] = nlohmann::json::array();
    for (const auto& rec : r.records)
        recs.push_back({{"p", rec.p},
                        {"C", rec.C},
                        {"deficit", rec.deficit},
                        {"g", rec.g}});
    return j.dump(2);
}

}  // namespace gausslab
