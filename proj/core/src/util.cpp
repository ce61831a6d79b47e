#include "mpae/util.hpp"

#include "mpae/errors.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace mpae {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
} // namespace

std::string bits_to_hex(std::span<const uint8_t> bits) {
    std::string out;
    out.reserve((bits.size() + 3) / 4);
    for (size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (size_t j = 0; j < 4 && i + j < bits.size(); ++j) {
            if (bits[i + j]) nibble |= 8 >> j;
        }
        out.push_back(kHexDigits[nibble]);
    }
    return out;
}

std::vector<uint8_t> hex_to_bits(const std::string& hex, size_t bit_count) {
    if (hex.size() != (bit_count + 3) / 4) {
        throw FormatError("hex_to_bits: expected " + std::to_string((bit_count + 3) / 4) +
                          " hex digits for " + std::to_string(bit_count) + " bits, got " +
                          std::to_string(hex.size()));
    }
    std::vector<uint8_t> bits(bit_count, 0);
    for (size_t i = 0; i < bit_count; ++i) {
        const int v = hex_value(hex[i / 4]);
        if (v < 0) throw FormatError("hex_to_bits: invalid hex digit");
        bits[i] = (v & (8 >> (i % 4))) ? 1 : 0;
    }
    // Padding bits beyond bit_count must be zero.
    if (bit_count % 4 != 0) {
        const int v = hex_value(hex.back());
        for (size_t j = bit_count % 4; j < 4; ++j) {
            if (v & (8 >> j)) throw FormatError("hex_to_bits: nonzero padding bits");
        }
    }
    return bits;
}

std::string dtos(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw ArgumentError("dtos: to_chars failed");
    return std::string(buf, ptr);
}

double stod_strict(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw FormatError("not a number: '" + s + "'");
    }
    return v;
}

void Fnv1a::update(std::span<const uint8_t> bytes) {
    uint64_t h = hash_;
    for (uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001B3ull;
    }
    hash_ = h;
}

void Fnv1a::update(const std::string& s) {
    update(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

void Fnv1a::update_u64(uint64_t v) {
    uint8_t bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<uint8_t>(v >> (8 * i));
    update(std::span<const uint8_t>(bytes, 8));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for write: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

} // namespace mpae
