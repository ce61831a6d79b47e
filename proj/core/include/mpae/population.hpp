#ifndef MPAE_POPULATION_HPP
#define MPAE_POPULATION_HPP

#include "mpae/individual.hpp"

#include <cstdint>
#include <vector>

namespace mpae {

// Pareto-selected elite subset of one population, offered to other
// populations as migrants. Entries keep the rank/crowding they had in the
// population-level selection that produced them.
struct ArchiveEntry {
    Individual individual;
    size_t rank = 0;
    double crowding = 0.0;
};

struct MigrationArchive {
    uint32_t owner_layer = 0;
    std::vector<ArchiveEntry> members;
    // Rank-0 members of maximal crowding, in (age, index) order. These are
    // the context-completion representatives; with a bi-objective front the
    // set is usually the two objective extremes.
    std::vector<size_t> best_candidates;

    // Context representative for a given generation. Ties among the
    // maximal-crowding members rotate deterministically so that every
    // objective champion gets its turn as the collaborator.
    const Individual& representative(uint64_t rotation) const {
        return members.at(best_candidates.at(rotation % best_candidates.size())).individual;
    }
};

// Recomputes best_candidates from the stored rank/crowding metadata.
void refresh_best_candidates(MigrationArchive& archive);

struct Population {
    uint32_t layer_index = 0;
    std::vector<Individual> members;
    MigrationArchive archive;
};

} // namespace mpae

#endif
