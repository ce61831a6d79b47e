#ifndef MPAE_UTIL_HPP
#define MPAE_UTIL_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace mpae {

// Bit vectors are stored as one byte per bit with values 0/1.
// Hex packing is big-endian within each nibble: bit i lands in nibble i/4
// at weight 8 >> (i % 4); a trailing partial nibble is zero padded.
std::string bits_to_hex(std::span<const uint8_t> bits);
std::vector<uint8_t> hex_to_bits(const std::string& hex, size_t bit_count);

// Shortest round-trip decimal form via std::to_chars; byte stable.
std::string dtos(double v);
double stod_strict(const std::string& s);

// FNV-1a, the stable hash used for event logs and state digests.
class Fnv1a {
public:
    void update(std::span<const uint8_t> bytes);
    void update(const std::string& s);
    void update_u64(uint64_t v);
    uint64_t digest() const { return hash_; }

private:
    uint64_t hash_ = 0xCBF29CE484222325ull;
};

std::vector<std::string> split(const std::string& s, char sep);

// Write-then-rename so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

std::string iso8601_utc_now();

} // namespace mpae

#endif
