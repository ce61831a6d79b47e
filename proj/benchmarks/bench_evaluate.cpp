#include <benchmark/benchmark.h>

#include "mpae/evaluate.hpp"

using namespace mpae;

static void BM_SyntheticEvaluate(benchmark::State& state) {
    CellShape shape;
    shape.num_intermediate_nodes = 4;
    shape.num_ops = 8;
    const SyntheticEvaluator eval(shape, OpVocabulary::default_for(8), 7, 0.5);
    Rng rng(1);
    std::vector<Genome> picks;
    for (int64_t l = 0; l < state.range(0); ++l) picks.push_back(random_genome(shape, 1, rng));
    const FullArchitecture arch = compose(picks);
    for (auto _ : state) {
        auto v = eval.evaluate(arch);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SyntheticEvaluate)->Arg(8)->Arg(20);

static void BM_ArchitectureKey(benchmark::State& state) {
    CellShape shape;
    shape.num_intermediate_nodes = 4;
    shape.num_ops = 8;
    Rng rng(2);
    std::vector<Genome> picks;
    for (int l = 0; l < 20; ++l) picks.push_back(random_genome(shape, 1, rng));
    const FullArchitecture arch = compose(picks);
    for (auto _ : state) {
        auto key = architecture_key(arch, shape);
        benchmark::DoNotOptimize(key);
    }
}
BENCHMARK(BM_ArchitectureKey);
