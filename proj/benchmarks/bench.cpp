#include <benchmark/benchmark.h>

#include "apery8/apfloat.hpp"
#include "apery8/eta.hpp"
#include "apery8/numeric.hpp"
#include "apery8/pcf.hpp"
#include "apery8/qseries.hpp"
#include "apery8/sequences.hpp"

using namespace apery8;

static void BM_series_multiply(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    QSeries t = t_qexp(order);
    QSeries y = y_qexp(order);
    for (auto _ : state) benchmark::DoNotOptimize(t * y);
}
BENCHMARK(BM_series_multiply)->Arg(100)->Arg(200)->Arg(400);

static void BM_hauptmodul_expansion(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(t_qexp(order));
}
BENCHMARK(BM_hauptmodul_expansion)->Arg(100)->Arg(200);

static void BM_wronskian_check(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_wronskian(order));
}
BENCHMARK(BM_wronskian_check)->Arg(100)->Arg(200);

static void BM_sequence_table(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(extend_table(n, 0));
}
BENCHMARK(BM_sequence_table)->Arg(100)->Arg(300);

static void BM_continuants(benchmark::State& state) {
    PCFSpec spec = PCFSpec::apery8();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_continuants(spec, n));
}
BENCHMARK(BM_continuants)->Arg(100)->Arg(300);

static void BM_zeta3(benchmark::State& state) {
    long prec = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(const_zeta3(prec));
}
BENCHMARK(BM_zeta3)->Arg(50)->Arg(200);

static void BM_eta_numeric(benchmark::State& state) {
    long prec = state.range(0);
    APComplex tau(APReal("0.3", prec), APReal("0.7", prec));
    for (auto _ : state) benchmark::DoNotOptimize(eta_numeric(tau, prec));
}
BENCHMARK(BM_eta_numeric)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
