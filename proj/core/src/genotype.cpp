#include "mpae/genotype.hpp"

#include "mpae/architecture.hpp"
#include "mpae/errors.hpp"
#include "mpae/util.hpp"

#include <sstream>

namespace mpae {

namespace {

std::string source_name(const CellShape& shape, uint32_t source) {
    if (source < shape.num_inputs) return "in" + std::to_string(source);
    return "n" + std::to_string(source - shape.num_inputs);
}

uint32_t source_from_name(const CellShape& shape, const std::string& name) {
    if (name.rfind("in", 0) == 0) {
        const uint32_t idx = static_cast<uint32_t>(std::stoul(name.substr(2)));
        if (idx >= shape.num_inputs) throw FormatError("genotype: bad input source '" + name + "'");
        return idx;
    }
    if (name.rfind('n', 0) == 0) {
        return shape.num_inputs + static_cast<uint32_t>(std::stoul(name.substr(1)));
    }
    throw FormatError("genotype: bad source name '" + name + "'");
}

} // namespace

std::string serialize_genotype(const Genome& genome, const OpVocabulary& vocab) {
    check_valid(genome);
    if (vocab.size() != genome.shape.num_ops) {
        throw ArgumentError("serialize_genotype: vocabulary does not match genome shape");
    }
    std::ostringstream out;
    out << "mpae-genotype v1\n";
    out << "segments: " << genome.segments << "\n";
    out << "nodes_per_segment: " << genome.shape.num_intermediate_nodes << "\n";
    out << "ops: ";
    for (size_t i = 0; i < vocab.size(); ++i) {
        if (i) out << ',';
        out << vocab.labels[i];
    }
    out << "\n";
    out << "bits: ";
    for (uint8_t b : genome.bits) out << (b ? '1' : '0');
    out << "\n";
    for (uint32_t s = 0; s < genome.segments; ++s) {
        Genome seg{genome.shape, 1, {}};
        auto view = genome.segment(s);
        seg.bits.assign(view.begin(), view.end());
        const CellDag dag = decode(seg);
        for (uint32_t j = 0; j < dag.nodes.size(); ++j) {
            out << "segment " << s << " node " << j << ":";
            for (const CellEdge& e : dag.nodes[j].edges) {
                out << ' ' << source_name(genome.shape, e.source) << ':' << vocab.labels[e.op];
            }
            out << "\n";
        }
    }
    return out.str();
}

Genome parse_genotype(const std::string& text, const CellShape& shape) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "mpae-genotype v1") {
        throw VersionMismatchError("genotype: unknown format line");
    }
    auto field = [&](const std::string& key) {
        if (!std::getline(in, line)) throw FormatError("genotype: truncated document");
        const std::string prefix = key + ": ";
        if (line.rfind(prefix, 0) != 0) {
            throw FormatError("genotype: expected '" + key + ":', got '" + line + "'");
        }
        return line.substr(prefix.size());
    };
    const uint32_t segments = static_cast<uint32_t>(std::stoul(field("segments")));
    const uint32_t nodes = static_cast<uint32_t>(std::stoul(field("nodes_per_segment")));
    if (nodes != shape.num_intermediate_nodes) {
        throw FormatError("genotype: node count does not match shape");
    }
    const auto labels = split(field("ops"), ',');
    if (labels.size() != shape.num_ops) {
        throw FormatError("genotype: op count does not match shape");
    }
    const std::string bitstring = field("bits");
    Genome g{shape, segments, {}};
    g.bits.reserve(bitstring.size());
    for (char c : bitstring) {
        if (c != '0' && c != '1') throw FormatError("genotype: bits must be 0/1");
        g.bits.push_back(c == '1' ? 1 : 0);
    }
    check_valid(g);

    // Cross-check the per-node lines against the bit string.
    for (uint32_t s = 0; s < segments; ++s) {
        Genome seg{shape, 1, {}};
        auto view = g.segment(s);
        seg.bits.assign(view.begin(), view.end());
        const CellDag dag = decode(seg);
        for (uint32_t j = 0; j < nodes; ++j) {
            if (!std::getline(in, line)) throw FormatError("genotype: missing node lines");
            const std::string expect_prefix =
                "segment " + std::to_string(s) + " node " + std::to_string(j) + ":";
            if (line.rfind(expect_prefix, 0) != 0) {
                throw FormatError("genotype: unexpected line '" + line + "'");
            }
            std::istringstream rest(line.substr(expect_prefix.size()));
            std::string token;
            size_t edge = 0;
            while (rest >> token) {
                const auto parts = split(token, ':');
                if (parts.size() != 2) throw FormatError("genotype: bad edge token '" + token + "'");
                if (edge >= dag.nodes[j].edges.size()) {
                    throw FormatError("genotype: too many edges on node line");
                }
                const CellEdge& e = dag.nodes[j].edges[edge];
                if (source_from_name(shape, parts[0]) != e.source ||
                    parts[1] != labels[e.op]) {
                    throw FormatError("genotype: node line disagrees with bits");
                }
                ++edge;
            }
            if (edge != dag.nodes[j].edges.size()) {
                throw FormatError("genotype: too few edges on node line");
            }
        }
    }
    return g;
}

} // namespace mpae
