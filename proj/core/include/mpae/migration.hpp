#ifndef MPAE_MIGRATION_HPP
#define MPAE_MIGRATION_HPP

#include "mpae/population.hpp"

#include <functional>
#include <span>
#include <vector>

namespace mpae {

struct MigrationPolicy {
    uint32_t base_count = 4;      // mu: migrants requested at distance 1
    uint32_t similarity_depth = 4; // D: best-member rank depth for similarity
    uint32_t max_total = 16;      // cap on migrants per receiving population

    void validate(uint32_t archive_size, uint32_t population_size) const;
    bool operator==(const MigrationPolicy&) const = default;
};

// |a - b|; throws SameLayerError when a == b.
uint32_t adjacent_distance(uint32_t a, uint32_t b);

// floor(mu / distance): hyperbolic decay, zero beyond distance mu.
// The max_total cap is applied across sources by build_migrant_pool.
uint32_t migrant_count(const MigrationPolicy& policy, uint32_t distance);

// Similarity of a genome to a population's best-D members:
//   dot(gen_a, sum of best-D bit vectors) / (D * Len)
// where "best" minimizes the per-population min-max-normalized objective
// sum. Ties in the best-D ranking break by member index.
double similarity(const Genome& gen_a, const Population& pop_b, uint32_t depth);

// The `count` archive members least similar to the target population,
// cloned with origin=Migrant. Archive membership already screens for
// fitness; low similarity injects diversity. Ties break by better
// normalized-objective sum within the archive, then archive index.
std::vector<Individual> select_migrants(const MigrationArchive& source,
                                        const Population& target, size_t count,
                                        uint32_t depth);

// Migrant pool for one receiver: every other layer contributes
// select_migrants(archive_a, pop_receiver, migrant_count(|a-r|), D),
// concatenated in ascending source-layer order. The max_total budget is
// spent nearest-source-first. `evaluate`, when provided, re-scores each
// migrant in the receiver's context before the pool is returned.
std::vector<Individual> build_migrant_pool(
    uint32_t receiver, std::span<const Population> populations, const MigrationPolicy& policy,
    const std::function<ObjectiveVector(const Genome&)>& evaluate = nullptr);

// Pool size build_migrant_pool will produce for a receiver, as a pure
// function of the geometry: min over the nearest-first allocation of
// sum_a migrant_count(|a - receiver|) and max_total. Baseline searchers use
// this to pad their offspring to the same evaluation budget.
uint32_t expected_migrant_total(uint32_t receiver, uint32_t layers,
                                const MigrationPolicy& policy);

} // namespace mpae

#endif
