#include "mpae/population.hpp"

#include "mpae/errors.hpp"

#include <algorithm>

namespace mpae {

void refresh_best_candidates(MigrationArchive& archive) {
    archive.best_candidates.clear();
    if (archive.members.empty()) {
        throw ArgumentError("archive for layer " + std::to_string(archive.owner_layer) +
                            " is empty");
    }
    size_t best_rank = archive.members[0].rank;
    for (const ArchiveEntry& e : archive.members) best_rank = std::min(best_rank, e.rank);
    double max_crowding = -1.0;
    for (const ArchiveEntry& e : archive.members) {
        if (e.rank == best_rank) max_crowding = std::max(max_crowding, e.crowding);
    }
    std::vector<size_t> ties;
    for (size_t i = 0; i < archive.members.size(); ++i) {
        const ArchiveEntry& e = archive.members[i];
        if (e.rank == best_rank && e.crowding == max_crowding) ties.push_back(i);
    }
    std::sort(ties.begin(), ties.end(), [&](size_t a, size_t b) {
        const auto ba = archive.members[a].individual.birth_generation;
        const auto bb = archive.members[b].individual.birth_generation;
        if (ba != bb) return ba < bb;
        return a < b;
    });
    archive.best_candidates = std::move(ties);
}

} // namespace mpae
