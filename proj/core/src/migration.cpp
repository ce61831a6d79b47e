#include "mpae/migration.hpp"

#include "mpae/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace mpae {

void MigrationPolicy::validate(uint32_t archive_size, uint32_t population_size) const {
    if (similarity_depth < 1 || similarity_depth > archive_size) {
        throw ConfigError("migration: similarity depth must lie in [1, archive size]");
    }
    if (similarity_depth > population_size) {
        throw ConfigError("migration: similarity depth exceeds population size");
    }
    if (max_total > population_size) {
        throw ConfigError("migration: max_total exceeds population size");
    }
    if (base_count > archive_size) {
        throw ConfigError("migration: base_count exceeds archive size");
    }
}

uint32_t adjacent_distance(uint32_t a, uint32_t b) {
    if (a == b) throw SameLayerError("adjacent_distance: identical layers " + std::to_string(a));
    return a > b ? a - b : b - a;
}

uint32_t migrant_count(const MigrationPolicy& policy, uint32_t distance) {
    if (distance < 1) throw ArgumentError("migrant_count: distance must be >= 1");
    return policy.base_count / distance;
}

namespace {

// Indices of the `depth` members with the smallest normalized objective
// sum; ties break by index.
std::vector<size_t> best_members(std::span<const ObjectiveVector> rows, uint32_t depth) {
    const auto sums = normalized_objective_sums(rows);
    std::vector<size_t> order(rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (sums[a] != sums[b]) return sums[a] < sums[b];
        return a < b;
    });
    order.resize(depth);
    return order;
}

} // namespace

double similarity(const Genome& gen_a, const Population& pop_b, uint32_t depth) {
    if (depth < 1 || depth > pop_b.members.size()) {
        throw ArgumentError("similarity: depth " + std::to_string(depth) +
                            " out of range for population of " +
                            std::to_string(pop_b.members.size()));
    }
    std::vector<ObjectiveVector> rows;
    rows.reserve(pop_b.members.size());
    for (const Individual& ind : pop_b.members) rows.push_back(ind.objs());

    std::vector<int64_t> bit_sum(gen_a.bits.size(), 0);
    for (size_t idx : best_members(rows, depth)) {
        const Genome& g = pop_b.members[idx].genome;
        if (g.bits.size() != bit_sum.size()) {
            throw LengthMismatchError("similarity: genome lengths differ");
        }
        for (size_t k = 0; k < bit_sum.size(); ++k) bit_sum[k] += g.bits[k];
    }
    const double numer = static_cast<double>(genome_dot(gen_a, bit_sum));
    return numer / (static_cast<double>(depth) * static_cast<double>(gen_a.bits.size()));
}

std::vector<Individual> select_migrants(const MigrationArchive& source,
                                        const Population& target, size_t count,
                                        uint32_t depth) {
    if (count > source.members.size()) {
        throw ArgumentError("select_migrants: requested " + std::to_string(count) +
                            " from archive of " + std::to_string(source.members.size()));
    }
    if (count == 0) return {};

    std::vector<ObjectiveVector> rows;
    rows.reserve(source.members.size());
    for (const ArchiveEntry& e : source.members) rows.push_back(e.individual.objs());
    const auto fitness_sums = normalized_objective_sums(rows);

    std::vector<double> sims(source.members.size());
    for (size_t i = 0; i < source.members.size(); ++i) {
        sims[i] = similarity(source.members[i].individual.genome, target, depth);
    }
    std::vector<size_t> order(source.members.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (sims[a] != sims[b]) return sims[a] < sims[b];
        if (fitness_sums[a] != fitness_sums[b]) return fitness_sums[a] < fitness_sums[b];
        return a < b;
    });
    order.resize(count);

    std::vector<Individual> out;
    out.reserve(count);
    for (size_t idx : order) {
        Individual clone = source.members[idx].individual;
        clone.origin = Origin::Migrant;
        out.push_back(std::move(clone));
    }
    return out;
}

uint32_t expected_migrant_total(uint32_t receiver, uint32_t layers,
                                const MigrationPolicy& policy) {
    if (receiver >= layers) throw ArgumentError("expected_migrant_total: receiver out of range");
    uint64_t total = 0;
    for (uint32_t a = 0; a < layers; ++a) {
        if (a == receiver) continue;
        total += migrant_count(policy, adjacent_distance(a, receiver));
    }
    return static_cast<uint32_t>(std::min<uint64_t>(total, policy.max_total));
}

std::vector<Individual> build_migrant_pool(
    uint32_t receiver, std::span<const Population> populations, const MigrationPolicy& policy,
    const std::function<ObjectiveVector(const Genome&)>& evaluate) {
    if (receiver >= populations.size()) {
        throw ArgumentError("build_migrant_pool: receiver out of range");
    }
    struct SourcePlan {
        uint32_t layer;
        uint32_t distance;
        uint32_t count;
    };
    std::vector<SourcePlan> plans;
    for (uint32_t a = 0; a < populations.size(); ++a) {
        if (a == receiver) continue;
        const uint32_t d = adjacent_distance(a, receiver);
        plans.push_back(SourcePlan{a, d, migrant_count(policy, d)});
    }
    // Spend the cap nearest first, then lower layer index.
    std::sort(plans.begin(), plans.end(), [](const SourcePlan& x, const SourcePlan& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        return x.layer < y.layer;
    });
    uint32_t remaining = policy.max_total;
    for (SourcePlan& p : plans) {
        p.count = std::min(p.count, remaining);
        remaining -= p.count;
    }
    std::sort(plans.begin(), plans.end(), [](const SourcePlan& x, const SourcePlan& y) {
        return x.layer < y.layer;
    });

    std::vector<Individual> pool;
    for (const SourcePlan& p : plans) {
        if (p.count == 0) continue;
        auto migrants = select_migrants(populations[p.layer].archive, populations[receiver],
                                        p.count, policy.similarity_depth);
        for (Individual& m : migrants) {
            if (evaluate) m.objectives = evaluate(m.genome);
            pool.push_back(std::move(m));
        }
    }
    return pool;
}

} // namespace mpae
