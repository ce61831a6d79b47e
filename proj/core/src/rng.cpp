#include "mpae/rng.hpp"

#include "mpae/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mpae {

size_t Rng::below(size_t n) {
    if (n == 0) throw ArgumentError("Rng::below: n must be >= 1");
    if (n == 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<uint64_t>(n);
    uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return static_cast<size_t>(x % static_cast<uint64_t>(n));
}

std::vector<size_t> Rng::sample_without_replacement(size_t n, size_t k) {
    if (k > n) throw ArgumentError("sample_without_replacement: k > n");
    // Partial Fisher-Yates over an index vector.
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    for (size_t i = 0; i < k; ++i) {
        const size_t j = i + below(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::string Rng::save_state() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
}

void Rng::load_state(const std::string& text) {
    std::istringstream is(text);
    is >> engine_;
    if (!is) throw FormatError("Rng::load_state: malformed engine state");
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t derive_stream_seed(uint64_t master_seed, uint64_t stream_index) {
    return splitmix64(master_seed + 0x9E3779B97F4A7C15ull * (stream_index + 1));
}

RngStreams::RngStreams(uint64_t master_seed, size_t populations)
    : global(derive_stream_seed(master_seed, 0)) {
    per_population.reserve(populations);
    for (size_t l = 0; l < populations; ++l) {
        per_population.emplace_back(derive_stream_seed(master_seed, l + 1));
    }
}

} // namespace mpae
