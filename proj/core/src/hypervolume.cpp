#include "mpae/hypervolume.hpp"

#include "mpae/errors.hpp"

#include <algorithm>

namespace mpae {

std::vector<ObjectiveVector> pareto_filter(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> front;
    for (const auto& p : points) {
        bool keep = true;
        for (const auto& q : front) {
            if (q == p || dominates(q, p)) {
                keep = false;
                break;
            }
        }
        if (!keep) continue;
        std::erase_if(front, [&](const ObjectiveVector& q) { return dominates(p, q); });
        front.push_back(p);
    }
    return front;
}

double hypervolume_2d(std::span<const ObjectiveVector> points, const std::array<double, 2>& ref) {
    std::vector<std::array<double, 2>> pts;
    for (const auto& p : points) {
        if (p.size() != 2) throw ArgumentError("hypervolume_2d: expects 2 objectives");
        if (p[0] < ref[0] && p[1] < ref[1]) pts.push_back({p[0], p[1]});
    }
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());
    double hv = 0.0;
    double ceiling = ref[1];
    for (const auto& p : pts) {
        if (p[1] >= ceiling) continue; // dominated by an earlier point
        hv += (ref[0] - p[0]) * (ceiling - p[1]);
        ceiling = p[1];
    }
    return hv;
}

} // namespace mpae
