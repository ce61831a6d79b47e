#include "mpae/architecture.hpp"

#include "mpae/errors.hpp"
#include "mpae/util.hpp"

namespace mpae {

FullArchitecture compose(std::span<const Genome> picks, size_t expected_layers) {
    if (picks.empty()) throw ArgumentError("compose: no picks");
    if (expected_layers != 0 && picks.size() != expected_layers) {
        throw ArgumentError("compose: expected " + std::to_string(expected_layers) +
                            " picks, got " + std::to_string(picks.size()));
    }
    FullArchitecture arch;
    arch.cells.reserve(picks.size());
    for (const Genome& g : picks) arch.cells.push_back(decode(g));
    return arch;
}

std::vector<Genome> split_segments(const Genome& g) {
    std::vector<Genome> out;
    out.reserve(g.segments);
    for (uint32_t s = 0; s < g.segments; ++s) {
        auto seg = g.segment(s);
        out.push_back(Genome{g.shape, 1, std::vector<uint8_t>(seg.begin(), seg.end())});
    }
    return out;
}

FullArchitecture decode_architecture(const Genome& g) {
    FullArchitecture arch;
    arch.cells.reserve(g.segments);
    for (const Genome& seg : split_segments(g)) arch.cells.push_back(decode(seg));
    return arch;
}

std::vector<Genome> architecture_genomes(const FullArchitecture& arch, const CellShape& shape) {
    std::vector<Genome> out;
    out.reserve(arch.cells.size());
    for (const CellDag& cell : arch.cells) out.push_back(encode(cell, shape));
    return out;
}

std::string architecture_key(const FullArchitecture& arch, const CellShape& shape) {
    std::vector<uint8_t> bits;
    bits.reserve(static_cast<size_t>(genome_length(shape)) * arch.cells.size());
    for (const CellDag& cell : arch.cells) {
        const Genome g = encode(cell, shape);
        bits.insert(bits.end(), g.bits.begin(), g.bits.end());
    }
    return bits_to_hex(bits);
}

FullArchitecture architecture_from_key(const std::string& key, const CellShape& shape,
                                       size_t layers) {
    if (layers == 0) throw ArgumentError("architecture_from_key: layers must be >= 1");
    const Genome whole = genome_from_hex(shape, static_cast<uint32_t>(layers), key);
    return decode_architecture(whole);
}

} // namespace mpae
