#ifndef MPAE_HYPERVOLUME_HPP
#define MPAE_HYPERVOLUME_HPP

#include "mpae/objectives.hpp"

#include <array>
#include <span>
#include <vector>

namespace mpae {

// Dominated 2D volume of a point set against a reference point (both
// objectives minimized). Points not strictly better than the reference in
// both coordinates contribute nothing; dominated points are filtered.
double hypervolume_2d(std::span<const ObjectiveVector> points, const std::array<double, 2>& ref);

// Nondominated subset, preserving first occurrence order; duplicates of an
// already-kept point are dropped.
std::vector<ObjectiveVector> pareto_filter(std::span<const ObjectiveVector> points);

} // namespace mpae

#endif
