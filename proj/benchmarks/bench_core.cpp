#include <benchmark/benchmark.h>

#include "cyclo/cns.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/multind.hpp"

using namespace cyclo;

namespace {

void BM_TaylorShift(benchmark::State& state) {
    const IntPoly phi = cyclotomic(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(taylor_shift(phi, 12));
    }
}
BENCHMARK(BM_TaylorShift)->Arg(12)->Arg(60)->Arg(210)->Arg(840);

void BM_ResiduePow(benchmark::State& state) {
    RingPtr ring = QuotientRing::make(cyclotomic(17));
    const Residue base = Residue::from_coeffs(ring, {-9, 1});
    const auto e = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pow(base, e));
    }
}
BENCHMARK(BM_ResiduePow)->Arg(17)->Arg(170)->Arg(1700);

void BM_Encode(benchmark::State& state) {
    const CnsBasis basis = base_polynomial(5, 6);
    const Residue gamma = Residue::from_coeffs(basis.ring, {313, -271, 161, -89});
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(basis, gamma));
    }
}
BENCHMARK(BM_Encode);

void BM_ExhaustiveVerify(benchmark::State& state) {
    const CnsBasis basis = base_polynomial(4, 1);
    const long radius = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_verify(basis, radius));
    }
    state.SetComplexityN(2 * radius + 1);
}
BENCHMARK(BM_ExhaustiveVerify)->Arg(2)->Arg(8)->Arg(16);

void BM_Theorem1Sweep(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem1_sweep(26, 19, jobs));
    }
}
BENCHMARK(BM_Theorem1Sweep)->Arg(1)->Arg(4);

void BM_IndependenceVerdict(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(independence_verdict(3, 18, 2));
    }
}
BENCHMARK(BM_IndependenceVerdict);

void BM_IndependenceSweep(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem2_sweep(17, 30, jobs));
    }
}
BENCHMARK(BM_IndependenceSweep)->Arg(1)->Arg(4);

void BM_NagellSearch(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nagell_search(200, 20, 20));
    }
}
BENCHMARK(BM_NagellSearch);

} // namespace

BENCHMARK_MAIN();
