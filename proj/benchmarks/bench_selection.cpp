#include <benchmark/benchmark.h>

#include "mpae/selection.hpp"

using namespace mpae;

namespace {

std::vector<Individual> random_pool(size_t n, size_t m, uint64_t seed) {
    Rng rng(seed);
    std::vector<Individual> pool;
    pool.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Individual ind;
        ind.id = i;
        ind.genome = Genome{CellShape{1, 2, 2, 2}, 1, {1, 0, 0, 1}};
        ObjectiveVector v(m);
        for (auto& x : v) x = rng.uniform01();
        ind.objectives = std::move(v);
        pool.push_back(std::move(ind));
    }
    return pool;
}

} // namespace

static void BM_NondominatedSort(benchmark::State& state) {
    const auto pool = random_pool(static_cast<size_t>(state.range(0)), 2, 1);
    for (auto _ : state) {
        auto fronts = fast_nondominated_sort(pool);
        benchmark::DoNotOptimize(fronts);
    }
}
BENCHMARK(BM_NondominatedSort)->Arg(64)->Arg(160)->Arg(512);

static void BM_EnvironmentalSelection(benchmark::State& state) {
    const auto pool = random_pool(static_cast<size_t>(state.range(0)), 2, 2);
    const size_t keep = pool.size() / 3;
    for (auto _ : state) {
        auto res = environmental_selection(pool, keep);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_EnvironmentalSelection)->Arg(64)->Arg(160)->Arg(512);
