#include "tdes/eisenstein.hpp"
#include "tdes/exact.hpp"
#include "tdes/specfun.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_HurwitzZeta(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tdes::hurwitz_zeta({3.5, 2.0}, 0.37));
}
BENCHMARK(BM_HurwitzZeta);

void BM_Kummer(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tdes::kummer_1f1({4.5, 0.0}, {12.0, 0.0}, {0.0, -30.0}));
}
BENCHMARK(BM_Kummer);

void BM_C1Exact(benchmark::State& st) {
    const tdes::ParityPoint p{static_cast<int>(st.range(0)), 5, 2};
    for (auto _ : st)
        benchmark::DoNotOptimize(tdes::c1_exact(p));
}
BENCHMARK(BM_C1Exact)->Arg(12)->Arg(20);

void BM_PairSumHurwitz(benchmark::State& st) {
    const tdes::DomainPoint pt{12, {4.5, 0.0}, {2.0, 0.0}};
    for (auto _ : st)
        benchmark::DoNotOptimize(tdes::pair_sum_hurwitz(pt, 3, 7, 1));
}
BENCHMARK(BM_PairSumHurwitz);

void BM_C1Series(benchmark::State& st) {
    const tdes::DomainPoint pt{12, {4.5, 0.0}, {2.0, 0.0}};
    tdes::Truncation tr;
    tr.c_max = st.range(0);
    for (auto _ : st)
        benchmark::DoNotOptimize(tdes::c1_series(pt, tr));
}
BENCHMARK(BM_C1Series)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
