#ifndef MPAE_CELL_HPP
#define MPAE_CELL_HPP

#include "mpae/rng.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpae {

// Geometry of one cell. A cell has two inputs and `num_intermediate_nodes`
// intermediate nodes; node j may draw from the two inputs and from nodes
// 0..j-1, giving j+2 candidate sources, and takes exactly two incoming
// edges from distinct sources. The cell output is the concatenation of all
// intermediate nodes.
struct CellShape {
    uint32_t num_intermediate_nodes = 4;
    uint32_t num_inputs = 2;
    uint32_t num_ops = 8;
    uint32_t edges_per_node = 2;

    void validate() const;
    bool operator==(const CellShape&) const = default;
};

// Candidate sources for node j.
inline uint32_t candidate_sources(const CellShape& s, uint32_t node) {
    return node + s.num_inputs;
}

// Candidate-edge blocks in one cell: sum over nodes of (j+2).
uint32_t blocks_per_cell(const CellShape& s);

// Bit length of one cell genome: sum over nodes of (j+2)*K.
uint32_t genome_length(const CellShape& s);

// Bit offset of node j's segment; segment length is (j+2)*K.
uint32_t node_offset(const CellShape& s, uint32_t node);

// Flat block index of (node, source) across the cell, node-major.
uint32_t block_index(const CellShape& s, uint32_t node, uint32_t source);

// Binary genome over one or more cell segments. Layout is segment-major,
// then node-major, then source-major, then op-major: the bit for
// (node j, source s, op o) sits at node_offset(j) + s*K + o within its
// segment. A VALID segment has, per node, exactly edges_per_node active
// blocks with exactly one op bit each; inactive blocks are all zero.
struct Genome {
    CellShape shape;
    uint32_t segments = 1;
    std::vector<uint8_t> bits;

    size_t length() const { return bits.size(); }
    size_t segment_length() const { return genome_length(shape); }
    std::span<const uint8_t> segment(uint32_t s) const;
    std::span<uint8_t> segment(uint32_t s);
    std::string hex() const;

    bool operator==(const Genome&) const = default;
};

Genome genome_from_hex(const CellShape& shape, uint32_t segments, const std::string& hex);

// One edge of a cell DAG. Sources 0..num_inputs-1 are the cell inputs;
// source num_inputs+i is intermediate node i.
struct CellEdge {
    uint32_t source = 0;
    uint32_t op = 0;
    bool operator==(const CellEdge&) const = default;
};

struct CellNode {
    std::array<CellEdge, 2> edges; // ascending source order
    bool operator==(const CellNode&) const = default;
};

struct CellDag {
    std::vector<CellNode> nodes;
    bool operator==(const CellDag&) const = default;
};

// Throws InvalidGenomeError naming the first violated node constraint.
void check_valid(const Genome& g);
bool is_valid(const Genome& g);

// decode requires a single-segment VALID genome.
CellDag decode(const Genome& g);

// Canonical inverse of decode; throws MalformedDagError on out-of-range or
// duplicate sources, bad ops, or wrong node/edge counts.
Genome encode(const CellDag& dag, const CellShape& shape);

// Uniform random VALID genome: per node, edge slots drawn uniformly without
// replacement among candidate sources, op uniform over K.
Genome random_genome(const CellShape& shape, uint32_t segments, Rng& rng);

// Minimal-change repair toward validity; a valid genome passes through
// unchanged and consumes no rng draws. Per node: extra active blocks are
// dropped uniformly, missing ones activated with a uniform op, multi-op
// blocks keep one uniformly chosen bit.
Genome repair(Genome g, Rng& rng);

// Sum_k a.bits[k] * b_sum[k]; the Eq-3 numerator primitive.
int64_t genome_dot(const Genome& a, std::span<const int64_t> b_sum);

// All valid single-segment genomes for a shape, in a deterministic
// node-major, source-pair-major, op-major order.
std::vector<Genome> enumerate_valid_genomes(const CellShape& shape);

// Count of valid cells: prod_j C(j+2, 2) * K^2. Throws CapExceededError if
// above `cap` (cap = 0 means unlimited).
uint64_t count_valid_cells(const CellShape& shape, uint64_t cap = 0);

} // namespace mpae

#endif
