#include <benchmark/benchmark.h>

#include <random>

#include "gausslab/cover.hpp"
#include "gausslab/expsum.hpp"
#include "gausslab/friable.hpp"
#include "gausslab/lfunc.hpp"
#include "gausslab/rigidity.hpp"

using namespace gausslab;

namespace {

ValueTable random_pm1_table(std::uint64_t N, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ValueTable v;
    v.N = N;
    v.values.resize(N - 1);
    for (auto& x : v.values) x = (rng() & 1) ? 1 : -1;
    return v;
}

void BM_dft_naive(benchmark::State& state) {
    auto v = random_pm1_table(static_cast<std::uint64_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(dft_naive(v));
}
BENCHMARK(BM_dft_naive)->Arg(1009)->Arg(4099);

void BM_dft_fast(benchmark::State& state) {
    auto v = random_pm1_table(static_cast<std::uint64_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(dft_fast(v));
}
BENCHMARK(BM_dft_fast)->Arg(1009)->Arg(4099)->Arg(100003)->Arg(1000003);

void BM_correlation(benchmark::State& state) {
    auto v = random_pm1_table(static_cast<std::uint64_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(correlation(v, 7));
}
BENCHMARK(BM_correlation)->Arg(100003)->Arg(1000003);

void BM_rigidity_scan(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rigidity_scan(MultiplicativeFunctionSpec::liouville(),
                          static_cast<std::uint64_t>(state.range(0)), 0.3,
                          GMode::Best));
}
BENCHMARK(BM_rigidity_scan)->Arg(100003);

void BM_factor_table(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            FactorTable(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_factor_table)->Arg(1 << 20);

void BM_product_levels(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const auto X = static_cast<std::uint64_t>(
        std::ceil(std::pow(static_cast<double>(q), 0.75)));
    for (auto _ : state) benchmark::DoNotOptimize(product_levels(q, X, 4));
}
BENCHMARK(BM_product_levels)->Arg(9973)->Arg(99991);

void BM_theta_count(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            theta_count(static_cast<std::uint64_t>(state.range(0)), 1000, 10));
}
BENCHMARK(BM_theta_count)->Arg(1000000)->Arg(10000000);

void BM_l_value_scan(benchmark::State& state) {
    LValueEvaluator ev(static_cast<std::uint64_t>(state.range(0)));
    double s = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev(s));
        s = s >= 1.0 ? 0.5 : s + 1e-3;
    }
}
BENCHMARK(BM_l_value_scan)->Arg(101)->Arg(1009);

}  // namespace

BENCHMARK_MAIN();
