#ifndef MPAE_SELECTION_HPP
#define MPAE_SELECTION_HPP

#include "mpae/individual.hpp"

#include <span>
#include <vector>

namespace mpae {

// Fast nondominated sorting (Deb et al. 2002). fronts[0] is the
// nondominated set; every individual appears in exactly one front.
// Throws UnevaluatedIndividualError if any pool member lacks objectives.
std::vector<std::vector<size_t>> fast_nondominated_sort(std::span<const Individual> pool);

// Crowding distance of each front member within its front. Boundary points
// get +infinity; objectives with zero range contribute nothing.
std::vector<double> crowding_distances(std::span<const Individual> pool,
                                       std::span<const size_t> front);

struct SelectionResult {
    std::vector<std::vector<size_t>> fronts; // pool indices per front
    std::vector<double> crowding;            // per pool index
    std::vector<size_t> rank;                // per pool index
    std::vector<size_t> selected;            // ascending pool index
};

// Survivor selection: fill front by front; the partially admitted front is
// truncated by descending crowding distance, ties broken by older
// birth_generation, then lower pool index. The selected set is returned in
// ascending pool order.
SelectionResult environmental_selection(std::span<const Individual> pool, size_t keep);

// Binary tournament on (rank asc, crowding desc); ties keep the first
// contestant. rank/crowding are indexed like the pool.
size_t binary_tournament(std::span<const size_t> rank, std::span<const double> crowding,
                         Rng& rng);

} // namespace mpae

#endif
