#include "mpae/stats.hpp"
#include "mpae/errors.hpp"
#include "mpae/rng.hpp"

#include <doctest.h>

using namespace mpae;

TEST_CASE("median of odd and even samples") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK_THROWS_AS(median({}), ArgumentError);
}

// Expected p-values frozen from an independent statistics package
// (exact method, alternative: first sample stochastically less).
TEST_CASE("mann-whitney exact p-values match the reference implementation") {
    const auto clear = mann_whitney_less(std::vector<double>{1.0, 2.0, 3.0},
                                         std::vector<double>{4.0, 5.0, 6.0});
    CHECK(clear.exact);
    CHECK(clear.u_greater == 0.0);
    CHECK(clear.p_less == doctest::Approx(0.05).epsilon(1e-12));

    const auto reversed = mann_whitney_less(std::vector<double>{4.0, 5.0, 6.0},
                                            std::vector<double>{1.0, 2.0, 3.0});
    CHECK(reversed.u_greater == 9.0);
    CHECK(reversed.p_less == doctest::Approx(1.0).epsilon(1e-12));

    const auto mixed = mann_whitney_less(
        std::vector<double>{0.31, 0.42, 0.29, 0.35, 0.4},
        std::vector<double>{0.44, 0.39, 0.5, 0.41, 0.38});
    CHECK(mixed.exact);
    CHECK(mixed.u_greater == 5.0);
    CHECK(mixed.p_less == doctest::Approx(0.075396825396825393).epsilon(1e-12));

    const auto interleaved = mann_whitney_less(std::vector<double>{0.1, 0.9, 0.3, 0.7},
                                               std::vector<double>{0.2, 0.8, 0.4, 0.6});
    CHECK(interleaved.u_greater == 8.0);
    CHECK(interleaved.p_less == doctest::Approx(0.55714285714285716).epsilon(1e-12));
}

TEST_CASE("mann-whitney handles ties via the corrected normal approximation") {
    const auto tied = mann_whitney_less(std::vector<double>{0.3, 0.3, 0.4, 0.5},
                                        std::vector<double>{0.3, 0.5, 0.6, 0.7});
    CHECK_FALSE(tied.exact);
    CHECK(tied.u_greater == 3.5);
    CHECK(tied.p_less == doctest::Approx(0.11688939709202395).epsilon(1e-9));
}

TEST_CASE("mann-whitney sanity under permutation and shift") {
    Rng rng(88);
    std::vector<double> x, y;
    for (int i = 0; i < 20; ++i) {
        x.push_back(rng.uniform01());
        y.push_back(rng.uniform01() + 0.4);
    }
    const auto shifted = mann_whitney_less(x, y);
    CHECK(shifted.p_less < 0.001);
    const auto self = mann_whitney_less(x, x);
    CHECK(self.p_less > 0.4); // no evidence against identical samples

    CHECK_THROWS_AS(mann_whitney_less({}, std::vector<double>{1.0}), ArgumentError);
}

TEST_CASE("normal cdf endpoints") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
    CHECK(normal_cdf(-6.0) < 1e-8);
    CHECK(normal_cdf(6.0) > 1.0 - 1e-8);
}
