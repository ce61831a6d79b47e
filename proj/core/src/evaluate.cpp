#include "mpae/evaluate.hpp"

#include "mpae/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mpae {

const char* backend_name(BackendKind k) {
    switch (k) {
    case BackendKind::Synthetic: return "synthetic";
    case BackendKind::Tabular: return "tabular";
    case BackendKind::Surrogate: return "surrogate";
    }
    throw ArgumentError("unknown backend kind");
}

BackendKind backend_from_name(const std::string& name) {
    if (name == "synthetic") return BackendKind::Synthetic;
    if (name == "tabular") return BackendKind::Tabular;
    if (name == "surrogate") return BackendKind::Surrogate;
    throw ConfigError("unknown backend: '" + name + "'");
}

SyntheticEvaluator::SyntheticEvaluator(CellShape shape, OpVocabulary vocab,
                                       uint64_t landscape_seed, double interaction_alpha)
    : shape_(shape), vocab_(std::move(vocab)), seed_(landscape_seed), alpha_(interaction_alpha) {
    shape_.validate();
    vocab_.validate();
    if (vocab_.size() != shape_.num_ops) {
        throw ArgumentError("SyntheticEvaluator: vocabulary size differs from shape num_ops");
    }
    if (alpha_ < 0.0 || alpha_ > 1.0) {
        throw ArgumentError("SyntheticEvaluator: interaction_alpha must lie in [0,1]");
    }
}

double SyntheticEvaluator::bit_weight(uint32_t layer, uint32_t bit) const {
    uint64_t h = splitmix64(seed_ ^ splitmix64(0x4C59 + layer));
    h = splitmix64(h ^ (0x9E3779B97F4A7C15ull * (bit + 1)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double SyntheticEvaluator::pair_weight(uint32_t layer, uint32_t bit_a, uint32_t bit_b) const {
    if (bit_a > bit_b) std::swap(bit_a, bit_b);
    uint64_t h = splitmix64(seed_ ^ splitmix64(0xB5A1 + layer));
    h = splitmix64(h ^ (0x9E3779B97F4A7C15ull * (bit_a + 1)));
    h = splitmix64(h ^ (0xC2B2AE3D27D4EB4Full * (bit_b + 1)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double SyntheticEvaluator::cell_contribution(uint32_t layer, const Genome& cell_genome) const {
    std::vector<uint32_t> active;
    active.reserve(2 * shape_.num_intermediate_nodes);
    for (uint32_t k = 0; k < cell_genome.bits.size(); ++k) {
        if (cell_genome.bits[k]) active.push_back(k);
    }
    double linear = 0.0;
    for (uint32_t k : active) linear += bit_weight(layer, k);
    linear /= static_cast<double>(active.size());

    double pairs = 0.0;
    size_t pair_count = 0;
    for (size_t i = 0; i < active.size(); ++i) {
        for (size_t j = i + 1; j < active.size(); ++j) {
            pairs += pair_weight(layer, active[i], active[j]);
            ++pair_count;
        }
    }
    if (pair_count > 0) pairs /= static_cast<double>(pair_count);
    return 0.5 * (linear + pairs);
}

double size_proxy(const FullArchitecture& arch, const OpVocabulary& vocab) {
    double total = 0.0;
    for (const CellDag& cell : arch.cells) {
        for (const CellNode& node : cell.nodes) {
            for (const CellEdge& e : node.edges) {
                if (e.op >= vocab.size()) throw ArgumentError("size_proxy: op out of vocabulary");
                total += vocab.costs[e.op];
            }
        }
    }
    return total;
}

ObjectiveVector SyntheticEvaluator::evaluate(const FullArchitecture& arch) const {
    if (arch.cells.empty()) throw ArgumentError("evaluate: empty architecture");
    const auto genomes = architecture_genomes(arch, shape_);

    double per_layer = 0.0;
    for (uint32_t l = 0; l < genomes.size(); ++l) {
        per_layer += cell_contribution(l, genomes[l]);
    }
    per_layer /= static_cast<double>(genomes.size());

    double interaction = 0.0;
    if (genomes.size() >= 2) {
        const double len = static_cast<double>(genomes[0].bits.size());
        for (size_t l = 0; l + 1 < genomes.size(); ++l) {
            size_t hamming = 0;
            for (size_t k = 0; k < genomes[l].bits.size(); ++k) {
                hamming += genomes[l].bits[k] != genomes[l + 1].bits[k];
            }
            interaction += static_cast<double>(hamming) / len;
        }
        interaction /= static_cast<double>(genomes.size() - 1);
    }

    const double error = (1.0 - alpha_) * per_layer + alpha_ * interaction;
    return ObjectiveVector{error, size_proxy(arch, vocab_)};
}

const ObjectiveVector& TabularBenchmark::lookup(const std::string& key) const {
    const auto it = table.find(key);
    if (it == table.end()) {
        throw MissingKeyError("tabular benchmark has no entry for key '" + key + "'");
    }
    return it->second;
}

void TabularBenchmark::insert(const std::string& key, ObjectiveVector v) {
    if (table.emplace(key, std::move(v)).second) key_order.push_back(key);
}

void TabularBenchmark::validate() const {
    shape.validate();
    vocab.validate();
    if (layers < 1) throw FormatError("tabular benchmark: layers must be >= 1");
    if (num_objectives < 2) throw FormatError("tabular benchmark: need >= 2 objectives");
    if (key_order.size() != table.size()) {
        throw FormatError("tabular benchmark: key order out of sync");
    }
    for (const auto& key : key_order) {
        const auto& v = lookup(key);
        if (v.size() != num_objectives) {
            throw FormatError("tabular benchmark: record arity mismatch for key '" + key + "'");
        }
        check_objectives(v);
        // Throws if any segment is structurally invalid.
        architecture_from_key(key, shape, layers);
    }
}

TabularEvaluator::TabularEvaluator(TabularBenchmark table) : table_(std::move(table)) {}

ObjectiveVector TabularEvaluator::evaluate(const FullArchitecture& arch) const {
    return table_.lookup(architecture_key(arch, table_.shape));
}

ObjectiveVector evaluate(const FullArchitecture& arch, BackendKind kind, const Evaluator& base,
                         const CellShape& shape, const SupernetState* state, double lambda) {
    ObjectiveVector v = base.evaluate(arch);
    if (kind != BackendKind::Surrogate) return v;
    if (state == nullptr) {
        throw AbsentStateError("surrogate backend requires supernet state");
    }
    const auto triples = participating_triples(arch, shape);
    const double frac = state->mean_maturity_fraction(triples);
    v[0] = std::min(1.0, v[0] * (1.0 + lambda * (1.0 - frac)));
    return v;
}

} // namespace mpae
