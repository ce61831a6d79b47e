#ifndef MPAE_OBJECTIVES_HPP
#define MPAE_OBJECTIVES_HPP

#include <span>
#include <vector>

namespace mpae {

// All objectives are minimized. Convention: values[0] is the error proxy
// in [0,1], values[1] the size proxy >= 0.
using ObjectiveVector = std::vector<double>;

// Throws ArgumentError unless length >= 2, all finite, error proxy in [0,1].
void check_objectives(const ObjectiveVector& v);

// Pareto dominance: a <= b in every objective and < in at least one.
bool dominates(std::span<const double> a, std::span<const double> b);

// Per-objective min-max normalization over a set, then row sums.
// Objectives with zero range normalize to 0. Used both by the similarity
// metric's best-D ranking and by migrant tie-breaks.
std::vector<double> normalized_objective_sums(std::span<const ObjectiveVector> rows);

} // namespace mpae

#endif
