// gausslab: command-line front end for the exponential-sum laboratory.
//
// Exit codes: 0 success, 1 usage error, 2 precondition violation,
// 3 tolerance/convergence failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gausslab/cover.hpp"
#include "gausslab/expsum.hpp"
#include "gausslab/friable.hpp"
#include "gausslab/io.hpp"
#include "gausslab/lfunc.hpp"
#include "gausslab/proximity.hpp"
#include "gausslab/rigidity.hpp"

using namespace gausslab;
using nlohmann::json;

namespace {

struct Options {
    std::uint64_t n = 0;
    double c = 0.3;
    std::string function = "legendre";
    std::string psi = "legendre";
    std::string g = "match";
    std::string backend = "corr";
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";

    // subcommand-specific
    std::uint64_t q = 0;
    std::uint64_t a = UINT64_MAX;
    std::uint64_t x_bound = 0;
    unsigned kmax = 8;
    double x = 0;
    std::uint64_t y = 0;
    std::uint64_t z = 1;
    double s = 0;
    double sigma_min = 0.5;
    bool saias = false;
    std::string witness_out;
    std::string preset_name;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(opt.out, text);
    }
}

GMode parse_gmode(const std::string& g) {
    if (g == "match") return GMode::MatchF;
    if (g == "legendre") return GMode::Legendre;
    if (g == "best") return GMode::Best;
    throw CLI::ValidationError("--g must be match|legendre|best");
}

DeficitBackend parse_backend(const std::string& b) {
    if (b == "corr") return DeficitBackend::Correlation;
    if (b == "fft" || b == "naive") return DeficitBackend::Spectral;
    throw CLI::ValidationError("--backend must be naive|fft|corr");
}

ValueTable build_table(const Options& opt) {
    if (opt.n == 0) throw std::domain_error("--n is required");
    return mf_table(parse_function_spec(opt.function), opt.n);
}

// ---------------------------------------------------------------- expsum --

void run_expsum(const Options& opt) {
    auto v = build_table(opt);
    ExpSumTable t =
        opt.backend == "naive" ? dft_naive(v) : dft_fast(v);
    if (!opt.out.empty() && opt.out.size() > 4 &&
        opt.out.substr(opt.out.size() - 4) == ".bin") {
        write_expsum_binary_file(t, opt.out);
        return;
    }
    if (opt.format == "json") {
        json j{{"N", t.N}, {"backend", t.backend}, {"function", t.function_id}};
        for (const auto& e : t.entries)
            j["entries"].push_back({e.real(), e.imag()});
        emit(opt, j.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os.precision(17);
    os << "a,re,im\n";
    for (std::uint64_t a = 0; a < t.N; ++a)
        os << a << ',' << t.entries[a].real() << ',' << t.entries[a].imag()
           << '\n';
    emit(opt, os.str());
}

// -------------------------------------------------------------- rigidity --

void run_rigidity(const Options& opt) {
    if (opt.n == 0) throw std::domain_error("--n is required");
    auto rep = rigidity_scan(parse_function_spec(opt.function), opt.n, opt.c,
                             parse_gmode(opt.g), parse_backend(opt.backend),
                             opt.threads);
    emit(opt, opt.format == "json" ? rigidity_json(rep) : rigidity_csv(rep));
}

// -------------------------------------------------------------- distance --

void run_distance(const Options& opt) {
    if (opt.n == 0) throw std::domain_error("--n is required");
    auto f = mf_table(parse_function_spec(opt.function), opt.n);
    auto psi = mf_table(parse_function_spec(opt.psi), opt.n);
    auto rep = prime_distance(f, psi);
    if (opt.format == "json") {
        json j{{"N", rep.N},           {"function", rep.f_id},
               {"psi", rep.psi_id},    {"distance", rep.distance},
               {"mean", rep.mean_fpsi}, {"prime_distance", rep.prime_distance},
               {"ht_bound", rep.ht_bound}};
        emit(opt, j.dump(2) + "\n");
        return;
    }
    emit(opt, distance_csv_header() + distance_csv_row(rep));
}

// ----------------------------------------------------------------- cover --

void run_cover(const Options& opt) {
    auto st = product_levels(opt.q, opt.x_bound, opt.kmax);
    if (!opt.witness_out.empty())
        write_text_file(opt.witness_out, cover_witness_lines(st));
    if (opt.format == "json") {
        json j{{"q", st.q}, {"X", st.X}, {"no_primes", st.no_primes}};
        auto K = minimal_cover_k(st);
        j["minimal_k"] = K ? json(*K) : json(nullptr);
        for (std::size_t k = 0; k < st.levels.size(); ++k)
            j["curve"].push_back({{"k", k + 1},
                                  {"level_size", st.levels[k].count()},
                                  {"cumulative_size", st.cumulative[k].count()}});
        emit(opt, j.dump(2) + "\n");
        return;
    }
    emit(opt, cover_curve_csv(st));
}

// --------------------------------------------------------------- friable --

void run_friable(const Options& opt) {
    const auto x = static_cast<std::uint64_t>(opt.x);
    if (opt.q != 0 && opt.a == UINT64_MAX) {
        auto rep = equidistribution_report(x, opt.y, opt.z, opt.q);
        if (opt.format == "json") {
            json j{{"x", rep.x},
                   {"y", rep.y},
                   {"z", rep.z},
                   {"q", rep.q},
                   {"total", rep.total},
                   {"mean", rep.mean},
                   {"relative_spread", rep.relative_spread},
                   {"counts", rep.counts}};
            emit(opt, j.dump(2) + "\n");
            return;
        }
        emit(opt, equidistribution_csv(rep));
        return;
    }
    std::uint64_t count = opt.q != 0
                              ? theta_count(x, opt.y, opt.z, opt.q, opt.a)
                              : theta_count(x, opt.y, opt.z);
    if (opt.format == "json") {
        json j{{"x", x}, {"y", opt.y}, {"z", opt.z}, {"count", count}};
        if (opt.q != 0) { j["q"] = opt.q; j["a"] = opt.a; }
        emit(opt, j.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << "x,y,z,count\n" << x << ',' << opt.y << ',' << opt.z << ',' << count
       << '\n';
    emit(opt, os.str());
}

// ----------------------------------------------------------------- alpha --

void run_alpha(const Options& opt) {
    if (opt.saias) {
        auto c = saias_compare(static_cast<std::uint64_t>(opt.x), opt.y, opt.z);
        if (opt.format == "json") {
            json j{{"x", opt.x},
                   {"y", opt.y},
                   {"z", opt.z},
                   {"alpha", c.saddle.alpha},
                   {"residual", c.saddle.residual},
                   {"brute", c.brute},
                   {"estimate", c.estimate},
                   {"ratio", c.ratio}};
            emit(opt, j.dump(2) + "\n");
            return;
        }
        emit(opt, saias_csv_header() +
                      saias_csv_row(static_cast<std::uint64_t>(opt.x), opt.y,
                                    opt.z, c));
        return;
    }
    auto sp = solve_alpha(opt.x, opt.y, opt.z);
    if (opt.format == "json") {
        json j{{"x", opt.x},
               {"y", opt.y},
               {"z", opt.z},
               {"alpha", sp.alpha},
               {"residual", sp.residual},
               {"iterations", sp.iterations}};
        emit(opt, j.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os.precision(17);
    os << "x,y,z,alpha,residual\n"
       << opt.x << ',' << opt.y << ',' << opt.z << ',' << sp.alpha << ','
       << sp.residual << '\n';
    emit(opt, os.str());
}

// ----------------------------------------------------------------- lfunc --

void run_lfunc(const Options& opt) {
    if (opt.n == 0) throw std::domain_error("--n is required");
    if (opt.s != 0) {
        double L = l_value({opt.n, opt.s});
        if (opt.format == "json") {
            json j{{"N", opt.n}, {"s", opt.s}, {"L", L}};
            emit(opt, j.dump(2) + "\n");
            return;
        }
        std::ostringstream os;
        os.precision(17);
        os << "N,s,L\n" << opt.n << ',' << opt.s << ',' << L << '\n';
        emit(opt, os.str());
        return;
    }
    auto row = corollary_row(opt.n, opt.sigma_min);
    if (opt.format == "json") {
        json j{{"N", row.N},
               {"lambda_chi_mean", row.lambda_chi_mean},
               {"chi_prime_sum", row.chi_prime_sum},
               {"L1_direct", row.L1_direct},
               {"L1_euler", row.L1_euler},
               {"num_real_zeros", row.num_real_zeros},
               {"min_one_minus_beta_log_N", row.min_one_minus_beta_log_N}};
        emit(opt, j.dump(2) + "\n");
        return;
    }
    emit(opt, corollary_csv_header() + corollary_csv_row(row));
}

// ---------------------------------------------------------------- preset --

std::uint64_t next_prime(std::uint64_t n) {
    while (!is_prime(n)) ++n;
    return n;
}

void run_preset(const Options& opt) {
    const std::string dir = opt.out.empty() ? "." : opt.out;
    std::filesystem::create_directories(dir);
    auto path = [&](const std::string& name) { return dir + "/" + name; };

    if (opt.preset_name == "gauss-identity") {
        std::ostringstream os;
        os.precision(17);
        os << "N,max_deficit,max_deficit_p,deficit_over_N\n";
        SvgSeries series;
        series.label = "max deficit / N";
        series.line = false;
        for (std::uint64_t t = 1000; t <= 10000; t += 1000) {
            std::uint64_t N = next_prime(t);
            auto rep = rigidity_scan(MultiplicativeFunctionSpec::legendre(), N,
                                     opt.c, GMode::MatchF,
                                     DeficitBackend::Spectral, opt.threads);
            os << N << ',' << rep.max_deficit << ',' << rep.max_deficit_p << ','
               << rep.max_deficit / static_cast<double>(N) << '\n';
            series.points.push_back(
                {static_cast<double>(N),
                 rep.max_deficit / static_cast<double>(N)});
        }
        write_text_file(path("gauss-identity.csv"), os.str());
        write_text_file(path("gauss-identity.svg"),
                        render_svg_plot({series}, "N", "max deficit / N"));
        return;
    }

    if (opt.preset_name == "thm1-flip") {
        const std::uint64_t N = opt.n ? opt.n : 1009;
        std::mt19937_64 rng(opt.seed);
        auto chi = legendre_table(N);
        auto primes = sieve_primes(std::min<std::uint64_t>(N - 1, 500)).primes;
        std::ostringstream os;
        os.precision(17);
        os << "N,flip_size,sample,distance,max_deficit,eight_d\n";
        SvgSeries series;
        series.label = "max deficit vs 8d";
        series.line = false;
        for (unsigned size = 1; size <= 8; ++size) {
            for (int sample = 0; sample < 3; ++sample) {
                std::set<std::uint64_t> B;
                while (B.size() < size)
                    B.insert(primes[rng() % primes.size()]);
                auto f = mf_table(MultiplicativeFunctionSpec::flip_of_legendre(
                                      {B.begin(), B.end()}),
                                  N);
                auto d = distance_count(f, chi);
                auto rep = rigidity_scan_table(f, opt.c, GMode::MatchF,
                                               DeficitBackend::Correlation,
                                               opt.threads);
                os << N << ',' << size << ',' << sample << ',' << d << ','
                   << rep.max_deficit << ',' << 8.0 * static_cast<double>(d)
                   << '\n';
                series.points.push_back(
                    {static_cast<double>(d), rep.max_deficit});
            }
        }
        write_text_file(path("thm1-flip.csv"), os.str());
        write_text_file(path("thm1-flip.svg"),
                        render_svg_plot({series}, "distance d", "max deficit"));
        return;
    }

    if (opt.preset_name == "corollary-liouville") {
        std::ostringstream os;
        os << corollary_csv_header();
        int rows = 0;
        for (std::uint64_t N = next_prime(101); rows < 20;
             N = next_prime(N + 1), ++rows)
            os << corollary_csv_row(corollary_row(N, opt.sigma_min));
        write_text_file(path("corollary-liouville.csv"), os.str());
        return;
    }

    if (opt.preset_name == "walker-cover") {
        std::ostringstream os;
        os << "q,X,minimal_k\n";
        for (std::uint64_t q : {1009ull, 2003ull, 4999ull, 9973ull}) {
            const auto X = static_cast<std::uint64_t>(
                std::ceil(std::pow(static_cast<double>(q), 0.75)));
            auto st = product_levels(q, X, opt.kmax);
            auto K = minimal_cover_k(st);
            os << q << ',' << X << ',' << (K ? std::to_string(*K) : "none")
               << '\n';
            write_text_file(path("walker-cover-q" + std::to_string(q) + ".csv"),
                            cover_curve_csv(st));
        }
        write_text_file(path("walker-cover.csv"), os.str());
        return;
    }

    if (opt.preset_name == "friable-ap") {
        std::ostringstream os;
        os.precision(17);
        os << "q,total,mean,relative_spread\n";
        for (std::uint64_t q : {101ull, 499ull, 997ull}) {
            auto rep = equidistribution_report(1000000, 100, 7, q);
            os << q << ',' << rep.total << ',' << rep.mean << ','
               << rep.relative_spread << '\n';
            write_text_file(path("friable-ap-q" + std::to_string(q) + ".csv"),
                            equidistribution_csv(rep));
        }
        write_text_file(path("friable-ap.csv"), os.str());
        return;
    }

    throw CLI::ValidationError(
        "unknown preset: " + opt.preset_name +
        " (expected gauss-identity|thm1-flip|corollary-liouville|"
        "walker-cover|friable-ap)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gausslab: twisted exponential sums, rigidity deficits, "
                 "residue coverage, friable counts, and L diagnostics"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--n", opt.n, "prime modulus N");
    app.add_option("--c", opt.c, "scan exponent: primes p <= N^c");
    app.add_option("--function", opt.function,
                   "function spec: liouville|legendre|principal|flip:2,13|file:<path>");
    app.add_option("--g", opt.g, "g mode: match|legendre|best");
    app.add_option("--backend", opt.backend, "backend: naive|fft|corr");
    app.add_option("--threads", opt.threads, "worker cap (0 = hardware)");
    app.add_option("--seed", opt.seed, "RNG seed for randomized presets");
    app.add_option("--out", opt.out, "output path (default stdout)");
    app.add_option("--format", opt.format, "csv|json");

    auto* c_expsum = app.add_subcommand("expsum", "twisted exponential sums");
    auto* c_rig = app.add_subcommand("rigidity", "dilation-deficit scan");
    auto* c_dist = app.add_subcommand("distance", "proximity of f to psi");
    c_dist->add_option("--psi", opt.psi, "comparison function spec");
    auto* c_cover = app.add_subcommand("cover", "prime-product coverage");
    c_cover->add_option("--q", opt.q, "prime modulus q")->required();
    c_cover->add_option("--x-bound", opt.x_bound, "primes below X")->required();
    c_cover->add_option("--kmax", opt.kmax, "max product length");
    c_cover->add_option("--witness-out", opt.witness_out,
                        "also dump witness factorizations");
    auto* c_friable = app.add_subcommand("friable", "friable/rough counts");
    c_friable->add_option("--x", opt.x, "count n <= x")->required();
    c_friable->add_option("--y", opt.y, "friable bound")->required();
    c_friable->add_option("--z", opt.z, "rough bound");
    c_friable->add_option("--q", opt.q, "residue modulus");
    c_friable->add_option("--a", opt.a, "residue class (omit for full sweep)");
    auto* c_alpha = app.add_subcommand("alpha", "saddle point solve");
    c_alpha->add_option("--x", opt.x, "x (only log x matters)")->required();
    c_alpha->add_option("--y", opt.y, "friable bound")->required();
    c_alpha->add_option("--z", opt.z, "rough bound");
    c_alpha->add_flag("--saias", opt.saias, "also compare against the sieve count");
    auto* c_lfunc = app.add_subcommand("lfunc", "Dirichlet L diagnostics");
    c_lfunc->add_option("--s", opt.s, "evaluate L(s) only");
    c_lfunc->add_option("--sigma-min", opt.sigma_min, "zero-scan left edge");
    auto* c_preset = app.add_subcommand("preset", "canned experiments");
    c_preset->add_option("name", opt.preset_name, "preset name")->required();

    for (auto* sub : {c_expsum, c_rig, c_dist, c_cover, c_friable, c_alpha,
                      c_lfunc, c_preset})
        sub->fallthrough();

    c_expsum->callback([&] { run_expsum(opt); });
    c_rig->callback([&] { run_rigidity(opt); });
    c_dist->callback([&] { run_distance(opt); });
    c_cover->callback([&] { run_cover(opt); });
    c_friable->callback([&] { run_friable(opt); });
    c_alpha->callback([&] { run_alpha(opt); });
    c_lfunc->callback([&] { run_lfunc(opt); });
    c_preset->callback([&] { run_preset(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violation: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violation: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "precondition violation: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "precondition violation: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "tolerance/convergence failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
