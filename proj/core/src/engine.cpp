#include "mpae/engine.hpp"

#include "mpae/errors.hpp"
#include "mpae/genetic.hpp"
#include "mpae/parallel.hpp"
#include "mpae/selection.hpp"
#include "mpae/table.hpp"
#include "mpae/util.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace mpae {

uint64_t RunState::state_hash() const {
    Fnv1a h;
    h.update(config_to_json_text(config));
    h.update_u64(generation);
    h.update_u64(warmed_up ? 1 : 0);
    h.update_u64(next_id);
    h.update_u64(eval_calls);
    auto hash_double = [&h](double v) {
        uint64_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        std::memcpy(&bits, &v, sizeof(bits));
        h.update_u64(bits);
    };
    auto hash_individual = [&](const Individual& ind) {
        h.update_u64(ind.id);
        h.update_u64(ind.birth_generation);
        h.update_u64(static_cast<uint64_t>(ind.origin));
        h.update(ind.genome.hex());
        if (ind.objectives) {
            h.update_u64(ind.objectives->size());
            for (double v : *ind.objectives) hash_double(v);
        } else {
            h.update_u64(UINT64_MAX);
        }
    };
    for (const Population& pop : populations) {
        h.update_u64(pop.layer_index);
        h.update_u64(pop.members.size());
        for (const Individual& ind : pop.members) hash_individual(ind);
        h.update_u64(pop.archive.members.size());
        for (size_t c : pop.archive.best_candidates) h.update_u64(c);
        for (const ArchiveEntry& e : pop.archive.members) {
            hash_individual(e.individual);
            h.update_u64(e.rank);
            hash_double(e.crowding);
        }
    }
    h.update_u64(supernet.trained_steps());
    for (double m : supernet.raw()) hash_double(m);
    h.update(rng.global.save_state());
    for (const Rng& r : rng.per_population) h.update(r.save_state());
    h.update_u64(log.hash());
    h.update_u64(log.line_count());
    h.update_u64(best_front.size());
    for (const FrontEntry& e : best_front) {
        h.update(e.key);
        for (double v : e.objectives) hash_double(v);
    }
    hash_double(best_error);
    return h.digest();
}

struct Engine::LayerSnapshot {
    std::string global_rng;
    std::string layer_rng;
    size_t layer_index;
    SupernetState supernet;
    uint64_t next_id;
    uint64_t eval_calls;
    std::vector<FrontEntry> best_front;
    double best_error;
};

Engine::Engine(SearchConfig cfg) : Engine(cfg, make_base_evaluator(cfg)) {}

Engine::Engine(SearchConfig cfg, std::shared_ptr<const Evaluator> base) : base_(std::move(base)) {
    cfg.validate();
    state_.config = cfg;
    state_.rng = RngStreams(cfg.seed, population_count());
    state_.supernet = SupernetState(cfg.layers, cfg.shape(), cfg.surrogate.eta,
                                    cfg.surrogate.max_maturity);
}

Engine::Engine(RunState state, std::shared_ptr<const Evaluator> base)
    : state_(std::move(state)), base_(std::move(base)) {
    state_.config.validate();
}

std::shared_ptr<const Evaluator> Engine::make_base_evaluator(const SearchConfig& cfg) {
    const BackendKind base_kind =
        cfg.backend == BackendKind::Surrogate ? cfg.surrogate_base : cfg.backend;
    if (base_kind == BackendKind::Synthetic) {
        return std::make_shared<SyntheticEvaluator>(cfg.shape(),
                                                    OpVocabulary::default_for(cfg.num_ops),
                                                    cfg.landscape.seed,
                                                    cfg.landscape.interaction_alpha);
    }
    TabularBenchmark table = load_table(cfg.table_path);
    if (table.shape != cfg.shape()) {
        throw ConfigError("table geometry does not match config shape");
    }
    if (table.layers != cfg.layers) {
        throw ConfigError("table layer count " + std::to_string(table.layers) +
                          " does not match config layers " + std::to_string(cfg.layers));
    }
    return std::make_shared<TabularEvaluator>(std::move(table));
}

ObjectiveVector Engine::score(const FullArchitecture& arch) const {
    return evaluate(arch, state_.config.backend, *base_, state_.config.shape(),
                    &state_.supernet, state_.config.surrogate.lambda);
}

FullArchitecture Engine::build_architecture(uint32_t layer, const Genome& genome,
                                            const std::vector<Genome>& context) const {
    if (is_global()) return decode_architecture(genome);
    std::vector<Genome> picks = context;
    if (picks.size() != state_.config.layers) {
        throw ArgumentError("context must cover every layer");
    }
    picks[layer] = genome;
    return compose(picks, state_.config.layers);
}

ObjectiveVector Engine::evaluate_in_context(uint32_t layer, const Genome& genome,
                                            const std::vector<Genome>& context) {
    const FullArchitecture arch = build_architecture(layer, genome, context);
    ObjectiveVector v = score(arch);
    ++state_.eval_calls;
    update_front(architecture_key(arch, state_.config.shape()), v);
    return v;
}

void Engine::update_front(const std::string& key, const ObjectiveVector& v) {
    state_.best_error = std::min(state_.best_error, v[0]);
    // Context- and maturity-dependent scoring can revisit a key with a
    // different vector; keep the better record per key.
    for (FrontEntry& e : state_.best_front) {
        if (e.key != key) continue;
        if (dominates(v, e.objectives)) {
            e.objectives = v;
            std::erase_if(state_.best_front, [&](const FrontEntry& o) {
                return o.key != key && dominates(v, o.objectives);
            });
        }
        return;
    }
    for (const FrontEntry& e : state_.best_front) {
        if (dominates(e.objectives, v)) return;
    }
    std::erase_if(state_.best_front,
                  [&](const FrontEntry& e) { return dominates(v, e.objectives); });
    state_.best_front.push_back(FrontEntry{key, v});
}

std::vector<Genome> Engine::current_context() const {
    // The generation being built keys the rotation among equally crowded
    // archive representatives.
    const uint64_t rotation = state_.generation + 1;
    std::vector<Genome> ctx;
    ctx.reserve(state_.populations.size());
    for (const Population& pop : state_.populations) {
        ctx.push_back(pop.archive.representative(rotation).genome);
    }
    return ctx;
}

MigrationArchive Engine::make_archive(const std::vector<Individual>& members,
                                      uint32_t layer) const {
    const auto sel = environmental_selection(members, state_.config.archive_size);
    MigrationArchive archive;
    archive.owner_layer = layer;
    archive.members.reserve(sel.selected.size());
    for (size_t idx : sel.selected) {
        archive.members.push_back(ArchiveEntry{members[idx], sel.rank[idx], sel.crowding[idx]});
    }
    refresh_best_candidates(archive);
    return archive;
}

void Engine::initialize() {
    if (!state_.populations.empty()) throw ArgumentError("initialize: already initialized");
    const SearchConfig& cfg = state_.config;
    const size_t pops = population_count();
    const uint32_t segments = is_global() ? cfg.layers : 1;

    state_.populations.resize(pops);
    for (size_t l = 0; l < pops; ++l) {
        Population& pop = state_.populations[l];
        pop.layer_index = static_cast<uint32_t>(l);
        pop.members.reserve(cfg.population_size);
        for (uint32_t j = 0; j < cfg.population_size; ++j) {
            Individual ind;
            ind.id = state_.next_id++;
            ind.genome = random_genome(cfg.shape(), segments, state_.rng.per_population[l]);
            ind.origin = Origin::Initial;
            ind.birth_generation = 0;
            pop.members.push_back(std::move(ind));
        }
    }

    // Joint positional evaluation: the index-j members of every population
    // stack into one architecture whose objectives credit each of them.
    std::vector<ObjectiveVector> scores(cfg.population_size);
    std::vector<std::string> keys(cfg.population_size);
    parallel_for(cfg.population_size, cfg.threads, [&](size_t j) {
        FullArchitecture arch;
        if (is_global()) {
            arch = decode_architecture(state_.populations[0].members[j].genome);
        } else {
            std::vector<Genome> picks;
            picks.reserve(pops);
            for (size_t l = 0; l < pops; ++l) {
                picks.push_back(state_.populations[l].members[j].genome);
            }
            arch = compose(picks, cfg.layers);
        }
        scores[j] = score(arch);
        keys[j] = architecture_key(arch, cfg.shape());
    });
    for (uint32_t j = 0; j < cfg.population_size; ++j) {
        ++state_.eval_calls;
        update_front(keys[j], scores[j]);
        for (size_t l = 0; l < pops; ++l) {
            state_.populations[l].members[j].objectives = scores[j];
        }
    }
    for (size_t l = 0; l < pops; ++l) {
        Population& pop = state_.populations[l];
        for (const Individual& ind : pop.members) {
            state_.log.append(LogRecord{0, pop.layer_index, ind.id, ind.origin,
                                        ind.genome.hex(), *ind.objectives});
        }
        pop.archive = make_archive(pop.members, pop.layer_index);
    }
}

std::vector<FullArchitecture> Engine::draw_training_batch() {
    if (is_global()) {
        return sample_training_batch_global(state_.populations[0], state_.rng.global);
    }
    return sample_training_batch(state_.populations, state_.rng.global);
}

void Engine::warm_up() { warm_up_steps(state_.config.effective_warmup()); }

void Engine::warm_up_steps(uint32_t steps) {
    if (state_.populations.empty()) throw ArgumentError("warm_up: initialize first");
    if (state_.generation != 0) throw ArgumentError("warm_up: search already started");
    for (uint32_t s = 0; s < steps; ++s) {
        state_.supernet.train_step(draw_training_batch());
    }
    state_.warmed_up = true;
    state_.log.append_event("warmup", std::to_string(steps));
}

uint32_t Engine::offspring_padding(uint32_t layer) const {
    const SearchConfig& cfg = state_.config;
    switch (cfg.searcher) {
    case SearcherKind::Mpae:
        return 0;
    case SearcherKind::Coevolution:
        // Stand in for the migrants an mpae run would evaluate here.
        return expected_migrant_total(layer, cfg.layers, cfg.migration);
    case SearcherKind::Global: {
        // One mega-step per generation must cost what mpae's L layer steps
        // cost: L*(2N) + total migrants, of which 2N is spent naturally.
        uint64_t migrants = 0;
        if (cfg.layers > 1) {
            for (uint32_t r = 0; r < cfg.layers; ++r) {
                migrants += expected_migrant_total(r, cfg.layers, cfg.migration);
            }
        }
        const uint64_t natural = 2ull * cfg.population_size;
        const uint64_t target = 2ull * cfg.population_size * cfg.layers + migrants;
        return static_cast<uint32_t>(target - natural);
    }
    }
    throw ArgumentError("unknown searcher kind");
}

Engine::LayerSnapshot Engine::snapshot() const {
    return LayerSnapshot{state_.rng.global.save_state(), std::string(), 0,
                         state_.supernet,     state_.next_id,
                         state_.eval_calls,   state_.best_front,
                         state_.best_error};
}

void Engine::restore(LayerSnapshot&& snap) {
    state_.rng.global.load_state(snap.global_rng);
    state_.rng.per_population[snap.layer_index].load_state(snap.layer_rng);
    state_.supernet = std::move(snap.supernet);
    state_.next_id = snap.next_id;
    state_.eval_calls = snap.eval_calls;
    state_.best_front = std::move(snap.best_front);
    state_.best_error = snap.best_error;
}

void Engine::evaluate_pool(std::vector<Individual>& pool, size_t begin, uint32_t layer,
                           const std::vector<Genome>& context, std::vector<LogRecord>& buffer) {
    const size_t n = pool.size() - begin;
    if (n == 0) return;
    std::vector<ObjectiveVector> scores(n);
    std::vector<std::string> keys(n);
    parallel_for(n, state_.config.threads, [&](size_t i) {
        const FullArchitecture arch =
            build_architecture(layer, pool[begin + i].genome, context);
        scores[i] = score(arch);
        keys[i] = architecture_key(arch, state_.config.shape());
    });
    const uint32_t gen = state_.generation + 1;
    for (size_t i = 0; i < n; ++i) {
        Individual& ind = pool[begin + i];
        ++state_.eval_calls;
        ind.objectives = scores[i];
        update_front(keys[i], scores[i]);
        buffer.push_back(LogRecord{gen, layer, ind.id, ind.origin, ind.genome.hex(), scores[i]});
    }
}

void Engine::evolve_generation() {
    if (!state_.warmed_up) throw ArgumentError("evolve_generation: warm up first");
    const SearchConfig& cfg = state_.config;
    const uint32_t t = state_.generation + 1;
    const bool sequential = cfg.searcher == SearcherKind::Mpae;
    const bool migrate = cfg.searcher == SearcherKind::Mpae && cfg.migration.base_count > 0 &&
                         cfg.layers > 1;
    const size_t pops = population_count();

    std::vector<Genome> frozen_context;
    if (cfg.searcher == SearcherKind::Coevolution) frozen_context = current_context();
    std::vector<std::pair<std::vector<Individual>, MigrationArchive>> staged;
    if (!sequential && !is_global()) staged.resize(pops);

    for (size_t l = 0; l < pops; ++l) {
        const uint32_t layer = static_cast<uint32_t>(l);
        LayerSnapshot snap = snapshot();
        snap.layer_index = l;
        snap.layer_rng = state_.rng.per_population[l].save_state();
        std::vector<LogRecord> buffer;
        try {
            // Shared-weight training ahead of this layer's update.
            const uint32_t train_steps =
                cfg.epochs_per_arch_update * (is_global() ? cfg.layers : 1);
            for (uint32_t s = 0; s < train_steps; ++s) {
                state_.supernet.train_step(draw_training_batch());
            }

            std::vector<Genome> context;
            if (!is_global()) {
                context = sequential ? current_context() : frozen_context;
            }

            // Parents re-enter the pool as carryover records and are
            // re-scored in the current context.
            std::vector<Individual> pool;
            const std::vector<Individual>& parents = state_.populations[l].members;
            pool.reserve(2 * parents.size() + cfg.migration.max_total +
                         offspring_padding(layer));
            for (const Individual& p : parents) {
                Individual entry;
                entry.id = state_.next_id++;
                entry.genome = p.genome;
                entry.origin = Origin::ParentCarryover;
                entry.birth_generation = p.birth_generation;
                pool.push_back(std::move(entry));
            }
            evaluate_pool(pool, 0, layer, context, buffer);

            const size_t offspring_count = cfg.population_size + offspring_padding(layer);
            auto offspring =
                genetic_manipulation(std::span<const Individual>(pool.data(), parents.size()),
                                     offspring_count, cfg.crossover_rate, cfg.mutation_rate, t,
                                     state_.rng.per_population[l]);
            for (Individual& o : offspring) o.id = state_.next_id++;
            const size_t offspring_begin = pool.size();
            for (Individual& o : offspring) pool.push_back(std::move(o));
            evaluate_pool(pool, offspring_begin, layer, context, buffer);

            if (migrate) {
                auto migrants = build_migrant_pool(layer, state_.populations, cfg.migration);
                for (Individual& m : migrants) {
                    m.id = state_.next_id++;
                    m.birth_generation = t;
                }
                const size_t migrant_begin = pool.size();
                for (Individual& m : migrants) pool.push_back(std::move(m));
                evaluate_pool(pool, migrant_begin, layer, context, buffer);
            }

            const auto sel = environmental_selection(pool, cfg.population_size);
            std::vector<Individual> survivors;
            survivors.reserve(cfg.population_size);
            for (size_t idx : sel.selected) survivors.push_back(pool[idx]);
            MigrationArchive archive = make_archive(survivors, layer);

            if (sequential || is_global()) {
                state_.populations[l].members = std::move(survivors);
                state_.populations[l].archive = std::move(archive);
            } else {
                staged[l] = {std::move(survivors), std::move(archive)};
            }
            for (const LogRecord& r : buffer) state_.log.append(r);
        } catch (...) {
            restore(std::move(snap));
            throw;
        }
    }

    if (!staged.empty()) {
        for (size_t l = 0; l < pops; ++l) {
            state_.populations[l].members = std::move(staged[l].first);
            state_.populations[l].archive = std::move(staged[l].second);
        }
    }
    state_.generation = t;
}

bool Engine::budget_exhausted() const {
    return state_.config.max_evaluations != 0 &&
           state_.eval_calls >= state_.config.max_evaluations;
}

void Engine::run() {
    if (state_.populations.empty()) initialize();
    if (!state_.warmed_up) warm_up();
    while (state_.generation < state_.config.generations && !budget_exhausted()) {
        evolve_generation();
        if (on_generation) on_generation(*this);
    }
    state_.log.flush();
}

RunState run_search(const SearchConfig& cfg, const std::function<void(Engine&)>& on_generation) {
    Engine engine(cfg);
    engine.on_generation = on_generation;
    engine.run();
    return std::move(engine.mutable_state());
}

} // namespace mpae
