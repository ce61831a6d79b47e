#include <benchmark/benchmark.h>

#include "mpae/engine.hpp"

using namespace mpae;

namespace {

SearchConfig bench_config(uint32_t layers, uint32_t pop) {
    SearchConfig cfg;
    cfg.layers = layers;
    cfg.population_size = pop;
    cfg.generations = 1;
    cfg.warmup_steps = 0;
    cfg.epochs_per_arch_update = 1;
    cfg.intermediate_nodes = 4;
    cfg.num_ops = 8;
    cfg.archive_size = 8;
    cfg.migration.base_count = 4;
    cfg.migration.similarity_depth = 4;
    cfg.migration.max_total = 16;
    cfg.seed = 3;
    return cfg;
}

} // namespace

// One full alternate-evolution generation at the reference geometry.
static void BM_EvolveGeneration(benchmark::State& state) {
    const SearchConfig cfg =
        bench_config(static_cast<uint32_t>(state.range(0)), static_cast<uint32_t>(state.range(1)));
    for (auto _ : state) {
        state.PauseTiming();
        Engine engine(cfg);
        engine.initialize();
        engine.warm_up_steps(0);
        state.ResumeTiming();
        engine.evolve_generation();
        benchmark::DoNotOptimize(engine.state().eval_calls);
    }
}
BENCHMARK(BM_EvolveGeneration)->Args({8, 16})->Args({20, 64})->Unit(benchmark::kMillisecond);

static void BM_Initialize(benchmark::State& state) {
    const SearchConfig cfg = bench_config(20, 64);
    for (auto _ : state) {
        Engine engine(cfg);
        engine.initialize();
        benchmark::DoNotOptimize(engine.state().next_id);
    }
}
BENCHMARK(BM_Initialize)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
