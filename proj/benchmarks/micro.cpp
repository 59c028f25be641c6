#include <benchmark/benchmark.h>

#include <vector>

#include "ap3/components.hpp"
#include "ap3/lap.hpp"
#include "cmcs/engine.hpp"

namespace {

using ap3::Cost;

ap3::Instance instance(int n) { return ap3::generate_instance(ap3::Family::random, n, 7, "bench"); }

void BM_SolveLap(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    cmcs::Rng rng(1);
    std::vector<Cost> m(n * n);
    for (auto& c : m) c = static_cast<Cost>(cmcs::uniform_index(rng, 1000));
    for (auto _ : state) benchmark::DoNotOptimize(ap3::solve_lap(m, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveLap)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_BestSwap(benchmark::State& state) {
    const auto inst = instance(static_cast<int>(state.range(0)));
    cmcs::Rng rng(2);
    const auto s0 = ap3::random_solution(inst.size(), rng);
    for (auto _ : state) {
        auto s = s0;
        ap3::best_swap(inst, s);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_BestSwap)->Arg(20)->Arg(40)->Arg(100);

void BM_AllDimensionHungarian(benchmark::State& state) {
    const auto inst = instance(static_cast<int>(state.range(0)));
    cmcs::Rng rng(3);
    const auto s0 = ap3::random_solution(inst.size(), rng);
    for (auto _ : state) {
        auto s = s0;
        ap3::all_dimension_hungarian(inst, s);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_AllDimensionHungarian)->Arg(20)->Arg(40)->Arg(100);

// Throughput of the chain itself: 10k applications per iteration.
void BM_StrategyA(benchmark::State& state) {
    const auto inst = instance(static_cast<int>(state.range(0)));
    const auto pool = ap3::standard_pool();
    const auto m = cmcs::TransitionMatrix::from_rows({{1, 1}, {1, 1}});
    const cmcs::CmcsConfig cfg{{ap3::names::kRandomSwap, ap3::names::kFirstSwap}, m, m};
    cmcs::Rng rng(4);
    const auto s0 = ap3::random_solution(inst.size(), rng);
    for (auto _ : state) {
        auto r = cmcs::run_strategy_a<ap3::Ap3Domain>(pool, cfg, inst, s0, cmcs::Budget::iterations(10000), rng);
        benchmark::DoNotOptimize(r.best_objective);
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_StrategyA)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
