#ifndef MPAE_EVALUATE_HPP
#define MPAE_EVALUATE_HPP

#include "mpae/architecture.hpp"
#include "mpae/objectives.hpp"
#include "mpae/ops.hpp"
#include "mpae/supernet.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace mpae {

enum class BackendKind { Synthetic, Tabular, Surrogate };

const char* backend_name(BackendKind k);
BackendKind backend_from_name(const std::string& name);

// Pure architecture scorer. Implementations must be safe to call from
// multiple threads concurrently.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual ObjectiveVector evaluate(const FullArchitecture& arch) const = 0;
};

// Deterministic decomposable landscape. The error proxy mixes a per-layer
// term with an adjacent-layer interaction term (mean normalized Hamming
// distance between neighboring cells), weighted by interaction_alpha.
// Rewarding similar adjacent cells is what makes cross-population migration
// pay off here. The per-layer term averages seeded weights over the active
// bits and over all pairs of active bits; the pair part makes each cell
// subspace rugged on its own, so decomposed per-layer search holds a real
// edge over one population dragging the whole concatenated genome. The
// size proxy is the summed op cost over active edges.
class SyntheticEvaluator final : public Evaluator {
public:
    SyntheticEvaluator(CellShape shape, OpVocabulary vocab, uint64_t landscape_seed,
                       double interaction_alpha);

    ObjectiveVector evaluate(const FullArchitecture& arch) const override;

    double bit_weight(uint32_t layer, uint32_t bit) const;
    double pair_weight(uint32_t layer, uint32_t bit_a, uint32_t bit_b) const;
    double cell_contribution(uint32_t layer, const Genome& cell_genome) const;
    const CellShape& shape() const { return shape_; }
    const OpVocabulary& vocab() const { return vocab_; }

private:
    CellShape shape_;
    OpVocabulary vocab_;
    uint64_t seed_;
    double alpha_;
};

// Size proxy alone: summed op cost over all edges of the architecture.
double size_proxy(const FullArchitecture& arch, const OpVocabulary& vocab);

// Complete lookup table over an enumerable architecture space.
struct TabularBenchmark {
    CellShape shape;
    uint32_t layers = 0;
    OpVocabulary vocab;
    uint32_t num_objectives = 2;
    std::unordered_map<std::string, ObjectiveVector> table;
    std::vector<std::string> key_order; // insertion order, for deterministic IO

    const ObjectiveVector& lookup(const std::string& key) const; // MissingKeyError
    void insert(const std::string& key, ObjectiveVector v);
    void validate() const; // every key decodes valid, every vector well formed
};

class TabularEvaluator final : public Evaluator {
public:
    explicit TabularEvaluator(TabularBenchmark table);

    ObjectiveVector evaluate(const FullArchitecture& arch) const override;
    const TabularBenchmark& table() const { return table_; }

private:
    TabularBenchmark table_;
};

// Backend dispatch. Surrogate inflates the base error proxy by
// (1 + lambda * (1 - mean maturity fraction of participating triples)),
// clamped to 1; a fully trained supernet reproduces the base value exactly.
// Throws AbsentStateError when kind is Surrogate and state is null.
ObjectiveVector evaluate(const FullArchitecture& arch, BackendKind kind, const Evaluator& base,
                         const CellShape& shape, const SupernetState* state, double lambda);

} // namespace mpae

#endif
