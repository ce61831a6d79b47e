#ifndef MPAE_ARCHITECTURE_HPP
#define MPAE_ARCHITECTURE_HPP

#include "mpae/cell.hpp"

#include <span>
#include <string>
#include <vector>

namespace mpae {

// A complete network: one decoded cell per layer.
struct FullArchitecture {
    std::vector<CellDag> cells;

    size_t layers() const { return cells.size(); }
    bool operator==(const FullArchitecture&) const = default;
};

// Stack the decoded picks, layer by layer. Each pick must be a valid
// single-segment genome; expected_layers != 0 enforces the count.
FullArchitecture compose(std::span<const Genome> picks, size_t expected_layers = 0);

// Split a multi-segment genome into its per-layer cell genomes.
std::vector<Genome> split_segments(const Genome& g);

// Decode a whole multi-segment genome at once.
FullArchitecture decode_architecture(const Genome& g);

// Canonical key: hex of the concatenated per-layer genome bits.
std::string architecture_key(const FullArchitecture& arch, const CellShape& shape);
FullArchitecture architecture_from_key(const std::string& key, const CellShape& shape,
                                       size_t layers);

// Re-encoded per-layer genomes of an architecture.
std::vector<Genome> architecture_genomes(const FullArchitecture& arch, const CellShape& shape);

} // namespace mpae

#endif
