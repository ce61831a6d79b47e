#include "mpae/supernet.hpp"

#include "mpae/errors.hpp"

#include <algorithm>

namespace mpae {

SupernetState::SupernetState(uint32_t layers, const CellShape& shape, double eta,
                             double max_maturity)
    : layers_(layers), shape_(shape), eta_(eta), max_maturity_(max_maturity) {
    shape.validate();
    if (layers < 1) throw ArgumentError("SupernetState: layers must be >= 1");
    if (!(eta > 0.0)) throw ArgumentError("SupernetState: eta must be > 0");
    if (!(max_maturity > 0.0)) throw ArgumentError("SupernetState: max_maturity must be > 0");
    if (eta > max_maturity) {
        throw ArgumentError("SupernetState: eta must not exceed max_maturity");
    }
    maturity_.assign(static_cast<size_t>(layers) * blocks_per_cell(shape) * shape.num_ops, 0.0);
}

size_t SupernetState::index_of(uint32_t layer, uint32_t block, uint32_t op) const {
    const uint32_t blocks = blocks_per_cell(shape_);
    if (layer >= layers_ || block >= blocks || op >= shape_.num_ops) {
        throw ArgumentError("SupernetState: triple out of range");
    }
    return (static_cast<size_t>(layer) * blocks + block) * shape_.num_ops + op;
}

double SupernetState::maturity(uint32_t layer, uint32_t block, uint32_t op) const {
    return maturity_[index_of(layer, block, op)];
}

double SupernetState::mean_maturity_fraction(std::span<const SupernetTriple> triples) const {
    if (triples.empty()) throw ArgumentError("mean_maturity_fraction: no triples");
    double acc = 0.0;
    for (const auto& t : triples) acc += maturity_[index_of(t.layer, t.block, t.op)];
    return acc / (static_cast<double>(triples.size()) * max_maturity_);
}

double SupernetState::mean_maturity_fraction() const {
    if (maturity_.empty()) return 0.0;
    double acc = 0.0;
    for (double m : maturity_) acc += m;
    return acc / (static_cast<double>(maturity_.size()) * max_maturity_);
}

void SupernetState::train_step(std::span<const FullArchitecture> batch) {
    if (batch.empty()) throw ArgumentError("train_step: empty batch");
    std::vector<uint8_t> touched(maturity_.size(), 0);
    for (const FullArchitecture& arch : batch) {
        for (const SupernetTriple& t : participating_triples(arch, shape_)) {
            touched[index_of(t.layer, t.block, t.op)] = 1;
        }
    }
    for (size_t i = 0; i < maturity_.size(); ++i) {
        if (touched[i]) {
            maturity_[i] += eta_ * (1.0 - maturity_[i] / max_maturity_);
        }
    }
    ++trained_steps_;
}

void SupernetState::restore(uint64_t steps, std::vector<double> maturity) {
    if (maturity.size() != maturity_.size()) {
        throw FormatError("SupernetState::restore: maturity size mismatch");
    }
    trained_steps_ = steps;
    maturity_ = std::move(maturity);
}

std::vector<SupernetTriple> participating_triples(const FullArchitecture& arch,
                                                  const CellShape& shape) {
    std::vector<SupernetTriple> out;
    for (uint32_t l = 0; l < arch.cells.size(); ++l) {
        const CellDag& cell = arch.cells[l];
        for (uint32_t j = 0; j < cell.nodes.size(); ++j) {
            for (const CellEdge& e : cell.nodes[j].edges) {
                out.push_back(SupernetTriple{l, block_index(shape, j, e.source), e.op});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SupernetTriple& a, const SupernetTriple& b) {
        if (a.layer != b.layer) return a.layer < b.layer;
        if (a.block != b.block) return a.block < b.block;
        return a.op < b.op;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SupernetTriple& a, const SupernetTriple& b) {
                              return a.layer == b.layer && a.block == b.block && a.op == b.op;
                          }),
              out.end());
    return out;
}

std::vector<std::vector<uint8_t>> sample_inclusions(std::span<const Population> populations,
                                                    Rng& rng, double p) {
    std::vector<std::vector<uint8_t>> included(populations.size());
    for (size_t l = 0; l < populations.size(); ++l) {
        if (populations[l].members.empty()) {
            throw ArgumentError("sample_inclusions: population " + std::to_string(l) + " is empty");
        }
        included[l].resize(populations[l].members.size());
        for (size_t i = 0; i < included[l].size(); ++i) {
            included[l][i] = rng.chance(p) ? 1 : 0;
        }
    }
    return included;
}

std::vector<FullArchitecture> sample_training_batch(std::span<const Population> populations,
                                                    Rng& rng, double p) {
    const auto included = sample_inclusions(populations, rng, p);
    std::vector<std::vector<size_t>> picks(populations.size());
    size_t batch_size = 1;
    for (size_t l = 0; l < populations.size(); ++l) {
        for (size_t i = 0; i < included[l].size(); ++i) {
            if (included[l][i]) picks[l].push_back(i);
        }
        batch_size = std::max(batch_size, picks[l].size());
    }
    std::vector<FullArchitecture> batch;
    batch.reserve(batch_size);
    // Pad short layers by resampling; draws happen layer-major in slot order.
    std::vector<std::vector<size_t>> slots(populations.size());
    for (size_t l = 0; l < populations.size(); ++l) {
        slots[l] = picks[l];
        slots[l].reserve(batch_size);
        while (slots[l].size() < batch_size) {
            if (picks[l].empty()) {
                slots[l].push_back(rng.below(populations[l].members.size()));
            } else {
                slots[l].push_back(picks[l][rng.below(picks[l].size())]);
            }
        }
    }
    for (size_t b = 0; b < batch_size; ++b) {
        std::vector<Genome> layer_picks;
        layer_picks.reserve(populations.size());
        for (size_t l = 0; l < populations.size(); ++l) {
            layer_picks.push_back(populations[l].members[slots[l][b]].genome);
        }
        batch.push_back(compose(layer_picks));
    }
    return batch;
}

std::vector<FullArchitecture> sample_training_batch_global(const Population& population,
                                                           Rng& rng, double p) {
    if (population.members.empty()) {
        throw ArgumentError("sample_training_batch_global: empty population");
    }
    std::vector<size_t> picks;
    for (size_t i = 0; i < population.members.size(); ++i) {
        if (rng.chance(p)) picks.push_back(i);
    }
    if (picks.empty()) picks.push_back(rng.below(population.members.size()));
    std::vector<FullArchitecture> batch;
    batch.reserve(picks.size());
    for (size_t i : picks) {
        batch.push_back(decode_architecture(population.members[i].genome));
    }
    return batch;
}

} // namespace mpae
