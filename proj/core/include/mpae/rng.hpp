#ifndef MPAE_RNG_HPP
#define MPAE_RNG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mpae {

// Deterministic random stream. All draws go through the bounded helpers
// below instead of std::uniform_*_distribution, whose output is
// implementation defined; this keeps runs bit-reproducible across
// standard libraries and thread counts.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53 bits of mantissa.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). n must be >= 1. Rejection sampling, unbiased.
    size_t below(size_t n);

    bool chance(double p) { return uniform01() < p; }

    // Distinct indices in [0, n), ascending order, k <= n.
    std::vector<size_t> sample_without_replacement(size_t n, size_t k);

    std::string save_state() const;
    void load_state(const std::string& text);

    bool operator==(const Rng& other) const { return engine_ == other.engine_; }

private:
    std::mt19937_64 engine_;
};

// Stable stream derivation: population l always gets the same stream for a
// given master seed, independent of how many populations exist.
uint64_t derive_stream_seed(uint64_t master_seed, uint64_t stream_index);

struct RngStreams {
    Rng global;
    std::vector<Rng> per_population;

    RngStreams(uint64_t master_seed, size_t populations);
};

// splitmix64 step; also used to derive synthetic-landscape weights.
uint64_t splitmix64(uint64_t x);

} // namespace mpae

#endif
