#include "mpae/objectives.hpp"

#include "mpae/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mpae {

void check_objectives(const ObjectiveVector& v) {
    if (v.size() < 2) throw ArgumentError("objective vector needs at least 2 objectives");
    for (double x : v) {
        if (!std::isfinite(x)) throw ArgumentError("objective values must be finite");
    }
    if (v[0] < 0.0 || v[0] > 1.0) throw ArgumentError("error proxy must lie in [0,1]");
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i] < 0.0) throw ArgumentError("size proxy must be >= 0");
    }
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ArgumentError("dominates: dimension mismatch");
    bool strictly_better = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

std::vector<double> normalized_objective_sums(std::span<const ObjectiveVector> rows) {
    if (rows.empty()) return {};
    const size_t m = rows[0].size();
    std::vector<double> lo(m, std::numeric_limits<double>::infinity());
    std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
    for (const auto& r : rows) {
        if (r.size() != m) throw ArgumentError("normalized_objective_sums: ragged rows");
        for (size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], r[i]);
            hi[i] = std::max(hi[i], r[i]);
        }
    }
    std::vector<double> sums(rows.size(), 0.0);
    for (size_t j = 0; j < rows.size(); ++j) {
        double s = 0.0;
        for (size_t i = 0; i < m; ++i) {
            const double range = hi[i] - lo[i];
            if (range > 0.0) s += (rows[j][i] - lo[i]) / range;
        }
        sums[j] = s;
    }
    return sums;
}

} // namespace mpae
