#include "mpae/genetic.hpp"

#include "mpae/errors.hpp"
#include "mpae/selection.hpp"

#include <algorithm>

namespace mpae {

namespace {

void swap_node_segment(Genome& a, Genome& b, uint32_t segment, uint32_t node) {
    const uint32_t k = a.shape.num_ops;
    const uint32_t off = node_offset(a.shape, node);
    const uint32_t len = candidate_sources(a.shape, node) * k;
    auto sa = a.segment(segment);
    auto sb = b.segment(segment);
    for (uint32_t i = 0; i < len; ++i) std::swap(sa[off + i], sb[off + i]);
}

void randomize_node_segment(Genome& g, uint32_t segment, uint32_t node, Rng& rng) {
    const uint32_t k = g.shape.num_ops;
    const uint32_t off = node_offset(g.shape, node);
    const uint32_t len = candidate_sources(g.shape, node) * k;
    auto seg = g.segment(segment);
    for (uint32_t i = 0; i < len; ++i) seg[off + i] = rng.chance(0.5) ? 1 : 0;
}

} // namespace

std::pair<Genome, Genome> crossover_mutate_pair(const Genome& a, const Genome& b,
                                                double cx_rate, double mut_rate, Rng& rng) {
    if (a.shape != b.shape || a.segments != b.segments) {
        throw ArgumentError("crossover_mutate_pair: parents have different geometry");
    }
    Genome ca = a;
    Genome cb = b;
    for (uint32_t s = 0; s < ca.segments; ++s) {
        for (uint32_t j = 0; j < ca.shape.num_intermediate_nodes; ++j) {
            if (rng.chance(cx_rate)) swap_node_segment(ca, cb, s, j);
        }
    }
    for (Genome* child : {&ca, &cb}) {
        for (uint32_t s = 0; s < child->segments; ++s) {
            for (uint32_t j = 0; j < child->shape.num_intermediate_nodes; ++j) {
                if (rng.chance(mut_rate)) randomize_node_segment(*child, s, j, rng);
            }
        }
    }
    ca = repair(std::move(ca), rng);
    cb = repair(std::move(cb), rng);
    return {std::move(ca), std::move(cb)};
}

std::vector<Individual> genetic_manipulation(std::span<const Individual> parents, size_t count,
                                             double cx_rate, double mut_rate,
                                             uint32_t birth_generation, Rng& rng) {
    if (parents.empty()) throw ArgumentError("genetic_manipulation: no parents");
    for (const Individual& p : parents) {
        if (!p.evaluated()) {
            throw UnevaluatedIndividualError("genetic_manipulation: parent " +
                                             std::to_string(p.id) + " unevaluated");
        }
    }
    // Rank the parents once; tournaments draw against this snapshot.
    const auto sel = environmental_selection(parents, parents.size());

    std::vector<Individual> offspring;
    offspring.reserve(count);
    while (offspring.size() < count) {
        const size_t pa = binary_tournament(sel.rank, sel.crowding, rng);
        const size_t pb = binary_tournament(sel.rank, sel.crowding, rng);
        auto [ga, gb] = crossover_mutate_pair(parents[pa].genome, parents[pb].genome, cx_rate,
                                              mut_rate, rng);
        Individual a;
        a.genome = std::move(ga);
        a.origin = Origin::Offspring;
        a.birth_generation = birth_generation;
        offspring.push_back(std::move(a));
        if (offspring.size() < count) {
            Individual b;
            b.genome = std::move(gb);
            b.origin = Origin::Offspring;
            b.birth_generation = birth_generation;
            offspring.push_back(std::move(b));
        }
    }
    return offspring;
}

} // namespace mpae
