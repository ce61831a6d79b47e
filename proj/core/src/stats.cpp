#include "mpae/stats.hpp"

#include "mpae/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mpae {

double median(std::vector<double> values) {
    if (values.empty()) throw ArgumentError("median: empty input");
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

// P(U <= u) from the exact null distribution of the Mann-Whitney U
// statistic: f(u; m, n) = f(u - n; m-1, n) + f(u; m, n-1).
double exact_p_leq(size_t m, size_t n, uint64_t u) {
    const size_t umax = m * n;
    std::vector<std::vector<double>> cur(m + 1), prev;
    // dp over j = number of y's processed; cur[i][v] = f(v; i, j).
    for (size_t j = 0; j <= n; ++j) {
        prev = cur;
        for (size_t i = 0; i <= m; ++i) {
            cur[i].assign(i * n + 1, 0.0);
            for (size_t v = 0; v <= i * j && v <= i * n; ++v) {
                if (i == 0 || j == 0) {
                    cur[i][v] = (v == 0) ? 1.0 : 0.0;
                    continue;
                }
                double acc = prev[i][v]; // largest element is a y
                if (v >= j) acc += cur[i - 1][v - j]; // largest element is an x
                cur[i][v] = acc;
            }
        }
    }
    double total = 0.0;
    double below = 0.0;
    for (size_t v = 0; v <= umax; ++v) {
        total += cur[m][v];
        if (v <= u) below += cur[m][v];
    }
    return below / total;
}

} // namespace

MannWhitneyResult mann_whitney_less(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) throw ArgumentError("mann_whitney_less: empty sample");
    const size_t m = x.size();
    const size_t n = y.size();

    double u = 0.0;
    bool any_tie = false;
    for (double xi : x) {
        for (double yj : y) {
            if (xi > yj) {
                u += 1.0;
            } else if (xi == yj) {
                u += 0.5;
                any_tie = true;
            }
        }
    }

    MannWhitneyResult res;
    res.u_greater = u;
    if (!any_tie && m * n <= 10000) {
        res.exact = true;
        res.p_less = exact_p_leq(m, n, static_cast<uint64_t>(u));
        return res;
    }

    // Tie-corrected normal approximation with continuity correction.
    std::map<double, size_t> tie_groups;
    for (double v : x) ++tie_groups[v];
    for (double v : y) ++tie_groups[v];
    double tie_term = 0.0;
    for (const auto& [_, t] : tie_groups) {
        const double td = static_cast<double>(t);
        tie_term += td * td * td - td;
    }
    const double nm = static_cast<double>(m) * static_cast<double>(n);
    const double total = static_cast<double>(m + n);
    const double mu = nm / 2.0;
    const double var =
        nm / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
    if (var <= 0.0) {
        // All values identical; no evidence either way.
        res.exact = false;
        res.p_less = 0.5;
        return res;
    }
    const double z = (u - mu + 0.5) / std::sqrt(var);
    res.exact = false;
    res.p_less = normal_cdf(z);
    return res;
}

} // namespace mpae
