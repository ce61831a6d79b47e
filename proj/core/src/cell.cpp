#include "mpae/cell.hpp"

#include "mpae/errors.hpp"
#include "mpae/util.hpp"

#include <algorithm>

namespace mpae {

void CellShape::validate() const {
    if (num_intermediate_nodes < 1) {
        throw ArgumentError("CellShape: num_intermediate_nodes must be >= 1");
    }
    if (num_inputs != 2) throw ArgumentError("CellShape: num_inputs is fixed at 2");
    if (num_ops < 2) throw ArgumentError("CellShape: num_ops must be >= 2");
    if (edges_per_node != 2) throw ArgumentError("CellShape: edges_per_node is fixed at 2");
}

uint32_t blocks_per_cell(const CellShape& s) {
    uint32_t total = 0;
    for (uint32_t j = 0; j < s.num_intermediate_nodes; ++j) total += candidate_sources(s, j);
    return total;
}

uint32_t genome_length(const CellShape& s) { return blocks_per_cell(s) * s.num_ops; }

uint32_t node_offset(const CellShape& s, uint32_t node) {
    uint32_t off = 0;
    for (uint32_t j = 0; j < node; ++j) off += candidate_sources(s, j) * s.num_ops;
    return off;
}

uint32_t block_index(const CellShape& s, uint32_t node, uint32_t source) {
    uint32_t idx = 0;
    for (uint32_t j = 0; j < node; ++j) idx += candidate_sources(s, j);
    return idx + source;
}

std::span<const uint8_t> Genome::segment(uint32_t s) const {
    const size_t len = segment_length();
    return std::span<const uint8_t>(bits).subspan(s * len, len);
}

std::span<uint8_t> Genome::segment(uint32_t s) {
    const size_t len = segment_length();
    return std::span<uint8_t>(bits).subspan(s * len, len);
}

std::string Genome::hex() const { return bits_to_hex(bits); }

Genome genome_from_hex(const CellShape& shape, uint32_t segments, const std::string& hex) {
    Genome g{shape, segments, {}};
    g.bits = hex_to_bits(hex, static_cast<size_t>(genome_length(shape)) * segments);
    return g;
}

namespace {

// Per-node structural check over one segment; reports the first violation.
void check_segment(const CellShape& shape, std::span<const uint8_t> seg, uint32_t segment_index,
                   bool multi_segment) {
    const uint32_t k = shape.num_ops;
    uint32_t off = 0;
    for (uint32_t j = 0; j < shape.num_intermediate_nodes; ++j) {
        const uint32_t sources = candidate_sources(shape, j);
        uint32_t active = 0;
        for (uint32_t s = 0; s < sources; ++s) {
            uint32_t set_bits = 0;
            for (uint32_t o = 0; o < k; ++o) {
                const uint8_t b = seg[off + s * k + o];
                if (b > 1) {
                    throw InvalidGenomeError("genome bits must be 0 or 1");
                }
                set_bits += b;
            }
            if (set_bits > 1) {
                std::string where = multi_segment
                    ? "segment " + std::to_string(segment_index) + " node " + std::to_string(j)
                    : "node " + std::to_string(j);
                throw InvalidGenomeError(where + ": block for source " + std::to_string(s) +
                                         " has " + std::to_string(set_bits) +
                                         " op bits set, expected at most 1");
            }
            if (set_bits == 1) ++active;
        }
        if (active != shape.edges_per_node) {
            std::string where = multi_segment
                ? "segment " + std::to_string(segment_index) + " node " + std::to_string(j)
                : "node " + std::to_string(j);
            throw InvalidGenomeError(where + ": " + std::to_string(active) +
                                     " active edge blocks, expected " +
                                     std::to_string(shape.edges_per_node));
        }
        off += sources * k;
    }
}

} // namespace

void check_valid(const Genome& g) {
    g.shape.validate();
    if (g.segments < 1) throw InvalidGenomeError("genome must have at least one segment");
    const size_t expect = static_cast<size_t>(genome_length(g.shape)) * g.segments;
    if (g.bits.size() != expect) {
        throw InvalidGenomeError("genome length " + std::to_string(g.bits.size()) +
                                 " does not match shape (expected " + std::to_string(expect) + ")");
    }
    for (uint32_t s = 0; s < g.segments; ++s) {
        check_segment(g.shape, g.segment(s), s, g.segments > 1);
    }
}

bool is_valid(const Genome& g) {
    try {
        check_valid(g);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

CellDag decode(const Genome& g) {
    if (g.segments != 1) {
        throw InvalidGenomeError("decode expects a single-segment genome");
    }
    check_valid(g);
    const uint32_t k = g.shape.num_ops;
    CellDag dag;
    dag.nodes.resize(g.shape.num_intermediate_nodes);
    uint32_t off = 0;
    for (uint32_t j = 0; j < g.shape.num_intermediate_nodes; ++j) {
        const uint32_t sources = candidate_sources(g.shape, j);
        uint32_t edge = 0;
        for (uint32_t s = 0; s < sources; ++s) {
            for (uint32_t o = 0; o < k; ++o) {
                if (g.bits[off + s * k + o]) {
                    dag.nodes[j].edges[edge++] = CellEdge{s, o};
                }
            }
        }
        off += sources * k;
    }
    return dag;
}

Genome encode(const CellDag& dag, const CellShape& shape) {
    shape.validate();
    if (dag.nodes.size() != shape.num_intermediate_nodes) {
        throw MalformedDagError("dag has " + std::to_string(dag.nodes.size()) +
                                " nodes, shape expects " +
                                std::to_string(shape.num_intermediate_nodes));
    }
    Genome g{shape, 1, std::vector<uint8_t>(genome_length(shape), 0)};
    for (uint32_t j = 0; j < dag.nodes.size(); ++j) {
        const uint32_t sources = candidate_sources(shape, j);
        const auto& edges = dag.nodes[j].edges;
        if (edges[0].source == edges[1].source) {
            throw MalformedDagError("node " + std::to_string(j) +
                                    ": duplicate source " + std::to_string(edges[0].source));
        }
        for (const CellEdge& e : edges) {
            if (e.source >= sources) {
                throw MalformedDagError("node " + std::to_string(j) + ": source " +
                                        std::to_string(e.source) + " out of range (max " +
                                        std::to_string(sources - 1) + ")");
            }
            if (e.op >= shape.num_ops) {
                throw MalformedDagError("node " + std::to_string(j) + ": op " +
                                        std::to_string(e.op) + " out of range");
            }
            g.bits[node_offset(shape, j) + e.source * shape.num_ops + e.op] = 1;
        }
    }
    return g;
}

Genome random_genome(const CellShape& shape, uint32_t segments, Rng& rng) {
    shape.validate();
    if (segments < 1) throw ArgumentError("random_genome: segments must be >= 1");
    Genome g{shape, segments, std::vector<uint8_t>(static_cast<size_t>(genome_length(shape)) * segments, 0)};
    for (uint32_t seg = 0; seg < segments; ++seg) {
        auto bits = g.segment(seg);
        for (uint32_t j = 0; j < shape.num_intermediate_nodes; ++j) {
            const uint32_t sources = candidate_sources(shape, j);
            const auto picks = rng.sample_without_replacement(sources, shape.edges_per_node);
            for (size_t s : picks) {
                const size_t op = rng.below(shape.num_ops);
                bits[node_offset(shape, j) + s * shape.num_ops + op] = 1;
            }
        }
    }
    return g;
}

Genome repair(Genome g, Rng& rng) {
    g.shape.validate();
    const size_t expect = static_cast<size_t>(genome_length(g.shape)) * g.segments;
    if (g.segments < 1 || g.bits.size() != expect) {
        throw InvalidGenomeError("repair: genome length does not match shape");
    }
    const uint32_t k = g.shape.num_ops;
    for (uint32_t seg = 0; seg < g.segments; ++seg) {
        auto bits = g.segment(seg);
        for (uint32_t j = 0; j < g.shape.num_intermediate_nodes; ++j) {
            const uint32_t sources = candidate_sources(g.shape, j);
            const uint32_t off = node_offset(g.shape, j);
            std::vector<uint32_t> active;
            std::vector<uint32_t> inactive;
            for (uint32_t s = 0; s < sources; ++s) {
                bool any = false;
                for (uint32_t o = 0; o < k; ++o) {
                    if (bits[off + s * k + o]) any = true;
                }
                (any ? active : inactive).push_back(s);
            }
            // Drop uniformly chosen extra active blocks.
            while (active.size() > g.shape.edges_per_node) {
                const size_t victim = rng.below(active.size());
                const uint32_t s = active[victim];
                for (uint32_t o = 0; o < k; ++o) bits[off + s * k + o] = 0;
                active.erase(active.begin() + static_cast<ptrdiff_t>(victim));
                inactive.push_back(s);
            }
            // Activate uniformly chosen inactive blocks with a uniform op.
            while (active.size() < g.shape.edges_per_node) {
                const size_t pick = rng.below(inactive.size());
                const uint32_t s = inactive[pick];
                bits[off + s * k + rng.below(k)] = 1;
                inactive.erase(inactive.begin() + static_cast<ptrdiff_t>(pick));
                active.push_back(s);
            }
            // Keep exactly one op bit per active block.
            for (uint32_t s : active) {
                std::vector<uint32_t> ops;
                for (uint32_t o = 0; o < k; ++o) {
                    if (bits[off + s * k + o]) ops.push_back(o);
                }
                if (ops.size() > 1) {
                    const uint32_t keep = ops[rng.below(ops.size())];
                    for (uint32_t o : ops) {
                        if (o != keep) bits[off + s * k + o] = 0;
                    }
                }
            }
        }
    }
    return g;
}

int64_t genome_dot(const Genome& a, std::span<const int64_t> b_sum) {
    if (a.bits.size() != b_sum.size()) {
        throw LengthMismatchError("genome_dot: lengths differ (" + std::to_string(a.bits.size()) +
                                  " vs " + std::to_string(b_sum.size()) + ")");
    }
    int64_t acc = 0;
    for (size_t i = 0; i < b_sum.size(); ++i) {
        if (a.bits[i]) acc += b_sum[i];
    }
    return acc;
}

std::vector<Genome> enumerate_valid_genomes(const CellShape& shape) {
    shape.validate();
    const uint32_t k = shape.num_ops;
    // Per node, enumerate every (source pair, op pair) assignment.
    std::vector<std::vector<std::vector<uint8_t>>> node_choices(shape.num_intermediate_nodes);
    for (uint32_t j = 0; j < shape.num_intermediate_nodes; ++j) {
        const uint32_t sources = candidate_sources(shape, j);
        const uint32_t seg_len = sources * k;
        for (uint32_t s1 = 0; s1 < sources; ++s1) {
            for (uint32_t s2 = s1 + 1; s2 < sources; ++s2) {
                for (uint32_t o1 = 0; o1 < k; ++o1) {
                    for (uint32_t o2 = 0; o2 < k; ++o2) {
                        std::vector<uint8_t> seg(seg_len, 0);
                        seg[s1 * k + o1] = 1;
                        seg[s2 * k + o2] = 1;
                        node_choices[j].push_back(std::move(seg));
                    }
                }
            }
        }
    }
    std::vector<Genome> out;
    std::vector<size_t> idx(shape.num_intermediate_nodes, 0);
    while (true) {
        Genome g{shape, 1, {}};
        g.bits.reserve(genome_length(shape));
        for (uint32_t j = 0; j < shape.num_intermediate_nodes; ++j) {
            const auto& seg = node_choices[j][idx[j]];
            g.bits.insert(g.bits.end(), seg.begin(), seg.end());
        }
        out.push_back(std::move(g));
        uint32_t j = shape.num_intermediate_nodes;
        while (j > 0) {
            --j;
            if (++idx[j] < node_choices[j].size()) break;
            idx[j] = 0;
            if (j == 0) return out;
        }
    }
}

uint64_t count_valid_cells(const CellShape& shape, uint64_t cap) {
    shape.validate();
    uint64_t count = 1;
    for (uint32_t j = 0; j < shape.num_intermediate_nodes; ++j) {
        const uint64_t sources = candidate_sources(shape, j);
        const uint64_t pairs = sources * (sources - 1) / 2;
        const uint64_t per_node = pairs * shape.num_ops * shape.num_ops;
        if (per_node != 0 && count > UINT64_MAX / per_node) {
            throw CapExceededError("cell count overflows uint64");
        }
        count *= per_node;
        if (cap != 0 && count > cap) {
            throw CapExceededError("cell count " + std::to_string(count) +
                                   " exceeds cap " + std::to_string(cap));
        }
    }
    return count;
}

} // namespace mpae
