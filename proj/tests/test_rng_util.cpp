#include "mpae/rng.hpp"
#include "mpae/util.hpp"
#include "mpae/errors.hpp"

#include <doctest.h>

#include <set>

using namespace mpae;

TEST_CASE("rng streams are reproducible and independent") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStreams s1(7, 3);
    RngStreams s2(7, 3);
    CHECK(s1.global.next_u64() == s2.global.next_u64());
    CHECK(s1.per_population[2].next_u64() == s2.per_population[2].next_u64());
    // Stream seeds differ from each other.
    std::set<uint64_t> seeds;
    for (uint64_t i = 0; i < 16; ++i) seeds.insert(derive_stream_seed(7, i));
    CHECK(seeds.size() == 16);
}

TEST_CASE("rng bounded draws stay in range and hit every value") {
    Rng rng(1);
    std::set<size_t> seen;
    for (int i = 0; i < 200; ++i) {
        const size_t v = rng.below(5);
        CHECK(v < 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);
    CHECK_THROWS_AS(rng.below(0), ArgumentError);

    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("sample_without_replacement returns distinct ascending indices") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto picks = rng.sample_without_replacement(6, 3);
        CHECK(picks.size() == 3);
        for (size_t i = 0; i + 1 < picks.size(); ++i) CHECK(picks[i] < picks[i + 1]);
        for (size_t v : picks) CHECK(v < 6);
    }
    CHECK_THROWS_AS(rng.sample_without_replacement(2, 3), ArgumentError);
}

TEST_CASE("rng state save/load resumes the exact sequence") {
    Rng rng(99);
    for (int i = 0; i < 10; ++i) rng.next_u64();
    const std::string saved = rng.save_state();
    std::vector<uint64_t> expect;
    for (int i = 0; i < 5; ++i) expect.push_back(rng.next_u64());
    Rng other(0);
    other.load_state(saved);
    for (uint64_t v : expect) CHECK(other.next_u64() == v);
}

TEST_CASE("hex packing round-trips and rejects bad padding") {
    std::vector<uint8_t> bits = {1, 0, 1, 0, 0, 1};
    const std::string hex = bits_to_hex(bits);
    CHECK(hex == "a4");
    CHECK(hex_to_bits(hex, 6) == bits);
    CHECK_THROWS_AS(hex_to_bits("a5", 6), FormatError); // nonzero padding
    CHECK_THROWS_AS(hex_to_bits("a", 6), FormatError);  // wrong digit count
    CHECK_THROWS_AS(hex_to_bits("zz", 8), FormatError);

    // Property: round trip over random lengths.
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const size_t len = 1 + rng.below(40);
        std::vector<uint8_t> b(len);
        for (auto& x : b) x = rng.chance(0.5) ? 1 : 0;
        CHECK(hex_to_bits(bits_to_hex(b), len) == b);
    }
}

TEST_CASE("dtos round-trips doubles exactly") {
    for (double v : {0.1, 1.0 / 3.0, 12345.6789, 1e-300, 0.0, 0.30000000000000004}) {
        CHECK(stod_strict(dtos(v)) == v);
    }
    CHECK_THROWS_AS(stod_strict("12x"), FormatError);
}

TEST_CASE("fnv1a is stable") {
    Fnv1a h;
    h.update(std::string("hello"));
    const uint64_t first = h.digest();
    Fnv1a h2;
    h2.update(std::string("hello"));
    CHECK(first == h2.digest());
    h2.update(std::string("x"));
    CHECK(first != h2.digest());
}
