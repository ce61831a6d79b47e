#ifndef MPAE_SUPERNET_HPP
#define MPAE_SUPERNET_HPP

#include "mpae/architecture.hpp"
#include "mpae/population.hpp"
#include "mpae/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mpae {

// Identifies one operation site in the supernet.
struct SupernetTriple {
    uint32_t layer = 0;
    uint32_t block = 0; // (node, source) block index within the cell
    uint32_t op = 0;
};

// Shared-state stand-in for supernet weights. Maturity of a triple grows
// each time the triple appears in a training batch, saturating at
// max_maturity; the surrogate evaluator reads it as training progress.
class SupernetState {
public:
    SupernetState() = default;
    SupernetState(uint32_t layers, const CellShape& shape, double eta, double max_maturity);

    double maturity(uint32_t layer, uint32_t block, uint32_t op) const;
    double mean_maturity_fraction(std::span<const SupernetTriple> triples) const;
    double mean_maturity_fraction() const; // over all entries

    uint64_t trained_steps() const { return trained_steps_; }
    uint32_t layers() const { return layers_; }
    double eta() const { return eta_; }
    double max_maturity() const { return max_maturity_; }
    const std::vector<double>& raw() const { return maturity_; }

    // Saturating update: every triple appearing in any batch member gains
    // eta * (1 - m / max_maturity), once per step regardless of multiplicity.
    void train_step(std::span<const FullArchitecture> batch);

    // Checkpoint plumbing.
    void restore(uint64_t steps, std::vector<double> maturity);

private:
    size_t index_of(uint32_t layer, uint32_t block, uint32_t op) const;

    uint32_t layers_ = 0;
    CellShape shape_;
    double eta_ = 0.1;
    double max_maturity_ = 1.0;
    uint64_t trained_steps_ = 0;
    std::vector<double> maturity_;
};

// Operation sites used by an architecture, deduplicated, in layer/node/edge
// order.
std::vector<SupernetTriple> participating_triples(const FullArchitecture& arch,
                                                  const CellShape& shape);

// Independent Bernoulli(p) inclusion decision per individual, drawn in
// population-major, member-major order.
std::vector<std::vector<uint8_t>> sample_inclusions(std::span<const Population> populations,
                                                    Rng& rng, double p = 0.5);

// Jointly sampled training batch: included individuals pair positionally
// into architectures; layers short of the batch size pad by resampling
// uniformly from their included set (or the whole population if the layer
// had no inclusions). Batch size is the max per-layer inclusion count, at
// least 1.
std::vector<FullArchitecture> sample_training_batch(std::span<const Population> populations,
                                                    Rng& rng, double p = 0.5);

// Batch sampling for whole-architecture genomes (one population whose
// individuals each decode to a complete network).
std::vector<FullArchitecture> sample_training_batch_global(const Population& population,
                                                           Rng& rng, double p = 0.5);

} // namespace mpae

#endif
