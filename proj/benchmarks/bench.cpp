#include <benchmark/benchmark.h>

#include "dioph/graphio.hpp"
#include "dioph/labeller.hpp"
#include "dioph/maximal.hpp"

using namespace dioph;

static void BM_SpfSieveBuild(benchmark::State& state) {
    for (auto _ : state) {
        SpfSieve sieve(static_cast<u32>(state.range(0)));
        benchmark::DoNotOptimize(sieve.primes().size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpfSieveBuild)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Complexity();

static void BM_EdgeCountFormula(benchmark::State& state) {
    const auto spec = make_maximal_spec(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(edge_count_formula(spec));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeCountFormula)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Complexity();

static void BM_EdgeCountBruteforce(benchmark::State& state) {
    const auto spec = make_maximal_spec(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(edge_count_bruteforce(spec));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeCountBruteforce)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void BM_DegreeSweepFormula(benchmark::State& state) {
    const u64 n = static_cast<u64>(state.range(0));
    const auto spec = make_maximal_spec(n);
    for (auto _ : state) {
        u64 sum = 0;
        for (u64 a = 1; a <= n; ++a) sum += degree_formula(a, spec);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_DegreeSweepFormula)->Arg(1'000)->Arg(10'000);

static void BM_SolvePetersen(benchmark::State& state) {
    const auto petersen = generate("petersen");
    for (auto _ : state) benchmark::DoNotOptimize(solve(petersen).verdict);
}
BENCHMARK(BM_SolvePetersen);

static void BM_SolveMaximalPrimeMode(benchmark::State& state) {
    const auto graph = generate("maximal_diophantine", static_cast<int>(state.range(0)));
    SearchConfig config;
    config.mode = GraphKind::prime;
    for (auto _ : state) benchmark::DoNotOptimize(solve(graph, config).verdict);
}
BENCHMARK(BM_SolveMaximalPrimeMode)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
