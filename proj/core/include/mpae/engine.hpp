#ifndef MPAE_ENGINE_HPP
#define MPAE_ENGINE_HPP

#include "mpae/config.hpp"
#include "mpae/evaluate.hpp"
#include "mpae/log.hpp"
#include "mpae/migration.hpp"
#include "mpae/population.hpp"
#include "mpae/supernet.hpp"

#include <functional>
#include <memory>

namespace mpae {

// One entry of the best-found nondominated set across everything a run has
// evaluated.
struct FrontEntry {
    std::string key; // canonical architecture key
    ObjectiveVector objectives;
};

struct RunState {
    SearchConfig config;
    uint32_t generation = 0;
    bool warmed_up = false;
    std::vector<Population> populations;
    SupernetState supernet;
    RngStreams rng{0, 0};
    uint64_t next_id = 0;
    uint64_t eval_calls = 0;
    EventLog log;
    std::vector<FrontEntry> best_front; // nondominated over all evaluations, insertion order
    double best_error = 1.0;

    // Stable digest over the full search state (not the log text itself).
    uint64_t state_hash() const;
};

// Runs one search. All three searcher kinds share this engine:
//   mpae         L populations, sequential layer updates against live
//                context, migration per the config policy
//   coevolution  L populations, generation-frozen context, no migration,
//                per-layer offspring padded by the would-be migrant count
//   global       one population of whole-architecture genomes, offspring
//                padded to the same per-generation evaluation budget
// Identical configs and seeds therefore consume identical evaluator-call
// counts per generation, and with layers=1 all three produce identical
// event logs.
class Engine {
public:
    explicit Engine(SearchConfig cfg);
    Engine(SearchConfig cfg, std::shared_ptr<const Evaluator> base);
    // Resume from a checkpointed state; the config inside `state` rules.
    Engine(RunState state, std::shared_ptr<const Evaluator> base);

    static std::shared_ptr<const Evaluator> make_base_evaluator(const SearchConfig& cfg);

    void initialize();
    void warm_up(); // config.effective_warmup() steps
    void warm_up_steps(uint32_t steps);
    void evolve_generation();

    // initialize + warm_up + generations, honoring max_evaluations at
    // generation boundaries. on_generation fires after each generation.
    void run();

    bool budget_exhausted() const;

    const RunState& state() const { return state_; }
    RunState& mutable_state() { return state_; }
    const Evaluator& base_evaluator() const { return *base_; }

    // Archive-best genome per layer; the completion context for single-layer
    // evaluation.
    std::vector<Genome> current_context() const;

    // Evaluate one candidate in the receiver layer's context (or a whole
    // multi-segment genome for the global searcher). Counts one call.
    ObjectiveVector evaluate_in_context(uint32_t layer, const Genome& genome,
                                        const std::vector<Genome>& context);

    std::function<void(Engine&)> on_generation;

private:
    struct LayerSnapshot;

    bool is_global() const { return state_.config.searcher == SearcherKind::Global; }
    size_t population_count() const { return is_global() ? 1 : state_.config.layers; }
    uint32_t offspring_padding(uint32_t layer) const;

    ObjectiveVector score(const FullArchitecture& arch) const;
    FullArchitecture build_architecture(uint32_t layer, const Genome& genome,
                                        const std::vector<Genome>& context) const;
    // Parallel scoring of a pool slice; commits objectives, call counts,
    // front updates and log records in pool order.
    void evaluate_pool(std::vector<Individual>& pool, size_t begin, uint32_t layer,
                       const std::vector<Genome>& context, std::vector<LogRecord>& buffer);
    void update_front(const std::string& key, const ObjectiveVector& v);
    MigrationArchive make_archive(const std::vector<Individual>& members, uint32_t layer) const;
    std::vector<FullArchitecture> draw_training_batch();

    LayerSnapshot snapshot() const;
    void restore(LayerSnapshot&& snap);

    RunState state_;
    std::shared_ptr<const Evaluator> base_;
};

// Convenience wrapper: construct, run, hand back the final state.
RunState run_search(const SearchConfig& cfg,
                    const std::function<void(Engine&)>& on_generation = nullptr);

} // namespace mpae

#endif
