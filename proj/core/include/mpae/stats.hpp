#ifndef MPAE_STATS_HPP
#define MPAE_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mpae {

double median(std::vector<double> values); // empty input throws

struct MannWhitneyResult {
    double u_greater;   // #{(i,j): x_i > y_j}, ties counted half
    double p_less;      // P(U <= u) under H0: evidence that x is stochastically less
    bool exact;         // exact distribution (no ties) vs normal approximation
};

// One-sided Mann-Whitney U test of "x stochastically less than y". The
// null distribution is exact (count recurrence) when there are no ties and
// n1*n2 is modest; otherwise a tie-corrected normal approximation with
// continuity correction is used.
MannWhitneyResult mann_whitney_less(std::span<const double> x, std::span<const double> y);

// Standard normal CDF.
double normal_cdf(double z);

} // namespace mpae

#endif
