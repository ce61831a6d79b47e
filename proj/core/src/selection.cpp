#include "mpae/selection.hpp"

#include "mpae/errors.hpp"

#include <algorithm>
#include <limits>

namespace mpae {

std::vector<std::vector<size_t>> fast_nondominated_sort(std::span<const Individual> pool) {
    const size_t n = pool.size();
    for (const auto& ind : pool) {
        if (!ind.evaluated()) {
            throw UnevaluatedIndividualError("selection pool contains an unevaluated individual (id " +
                                             std::to_string(ind.id) + ")");
        }
    }
    std::vector<std::vector<size_t>> dominated_by(n);
    std::vector<size_t> domination_count(n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const auto& a = *pool[i].objectives;
            const auto& b = *pool[j].objectives;
            if (dominates(a, b)) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(b, a)) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }
    std::vector<std::vector<size_t>> fronts;
    std::vector<size_t> current;
    for (size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) current.push_back(i);
    }
    while (!current.empty()) {
        std::vector<size_t> next;
        for (size_t i : current) {
            for (size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distances(std::span<const Individual> pool,
                                       std::span<const size_t> front) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(front.size(), 0.0);
    if (front.empty()) return dist;
    const size_t m = pool[front[0]].objs().size();
    if (front.size() <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    std::vector<size_t> order(front.size());
    for (size_t obj = 0; obj < m; ++obj) {
        for (size_t i = 0; i < front.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            const double va = pool[front[a]].objs()[obj];
            const double vb = pool[front[b]].objs()[obj];
            if (va != vb) return va < vb;
            return front[a] < front[b];
        });
        const double lo = pool[front[order.front()]].objs()[obj];
        const double hi = pool[front[order.back()]].objs()[obj];
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        const double range = hi - lo;
        if (range <= 0.0) continue;
        for (size_t i = 1; i + 1 < order.size(); ++i) {
            if (dist[order[i]] == inf) continue;
            const double prev = pool[front[order[i - 1]]].objs()[obj];
            const double next = pool[front[order[i + 1]]].objs()[obj];
            dist[order[i]] += (next - prev) / range;
        }
    }
    return dist;
}

SelectionResult environmental_selection(std::span<const Individual> pool, size_t keep) {
    if (keep > pool.size()) {
        throw ArgumentError("environmental_selection: keep " + std::to_string(keep) +
                            " exceeds pool size " + std::to_string(pool.size()));
    }
    SelectionResult res;
    res.fronts = fast_nondominated_sort(pool);
    res.crowding.assign(pool.size(), 0.0);
    res.rank.assign(pool.size(), 0);
    for (size_t f = 0; f < res.fronts.size(); ++f) {
        const auto dist = crowding_distances(pool, res.fronts[f]);
        for (size_t i = 0; i < res.fronts[f].size(); ++i) {
            res.crowding[res.fronts[f][i]] = dist[i];
            res.rank[res.fronts[f][i]] = f;
        }
    }
    size_t remaining = keep;
    for (const auto& front : res.fronts) {
        if (remaining == 0) break;
        if (front.size() <= remaining) {
            res.selected.insert(res.selected.end(), front.begin(), front.end());
            remaining -= front.size();
            continue;
        }
        // Truncate by crowding, then age, then pool index.
        std::vector<size_t> order = front;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (res.crowding[a] != res.crowding[b]) return res.crowding[a] > res.crowding[b];
            if (pool[a].birth_generation != pool[b].birth_generation) {
                return pool[a].birth_generation < pool[b].birth_generation;
            }
            return a < b;
        });
        order.resize(remaining);
        res.selected.insert(res.selected.end(), order.begin(), order.end());
        remaining = 0;
    }
    std::sort(res.selected.begin(), res.selected.end());
    return res;
}

size_t binary_tournament(std::span<const size_t> rank, std::span<const double> crowding,
                         Rng& rng) {
    if (rank.empty()) throw ArgumentError("binary_tournament: empty pool");
    const size_t a = rng.below(rank.size());
    const size_t b = rng.below(rank.size());
    if (rank[b] < rank[a]) return b;
    if (rank[a] < rank[b]) return a;
    if (crowding[b] > crowding[a]) return b;
    return a;
}

} // namespace mpae
