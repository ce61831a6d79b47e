#ifndef MPAE_GENETIC_HPP
#define MPAE_GENETIC_HPP

#include "mpae/individual.hpp"

#include <span>
#include <utility>
#include <vector>

namespace mpae {

// Connection crossover and random reassignment over a parent pair. Per
// (segment, node): with probability cx_rate the node's whole edge-block
// segment is swapped; then, per child and node, with probability mut_rate
// the node segment is redrawn as uniform random bits. Both children pass
// through repair, so outputs are always valid. Draw order is fixed:
// crossover decisions node by node, then child a's mutations, then child
// b's, then repairs.
std::pair<Genome, Genome> crossover_mutate_pair(const Genome& a, const Genome& b,
                                                double cx_rate, double mut_rate, Rng& rng);

// N offspring via binary tournament on (Pareto rank, crowding) over the
// evaluated parents. Ids are left at 0 for the caller to assign.
std::vector<Individual> genetic_manipulation(std::span<const Individual> parents, size_t count,
                                             double cx_rate, double mut_rate,
                                             uint32_t birth_generation, Rng& rng);

} // namespace mpae

#endif
