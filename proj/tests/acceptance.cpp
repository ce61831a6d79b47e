// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code; the reference
// configurations are desk scale and run on one machine in well under the
// stated budgets.
#include "mpae/baselines.hpp"
#include "mpae/genetic.hpp"
#include "mpae/hypervolume.hpp"
#include "mpae/runner.hpp"
#include "mpae/selection.hpp"
#include "mpae/stats.hpp"
#include "mpae/table.hpp"
#include "mpae/util.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace mpae;
namespace fs = std::filesystem;

namespace {

struct CheckFailure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw CheckFailure{detail};
}

CellShape shape_of(uint32_t nodes, uint32_t ops) {
    CellShape s;
    s.num_intermediate_nodes = nodes;
    s.num_ops = ops;
    return s;
}

// ---------------------------------------------------------------------------
// Criterion 1: encoding round trip over 10,000 seeded random genomes.

std::string criterion_round_trip() {
    Rng rng(10001);
    size_t total = 0;
    for (uint32_t b : {1u, 2u, 4u}) {
        for (uint32_t k : {2u, 4u, 8u}) {
            const CellShape s = shape_of(b, k);
            const size_t per_shape = 10000 / 9 + 1;
            for (size_t i = 0; i < per_shape; ++i) {
                const Genome g = random_genome(s, 1, rng);
                const CellDag dag = decode(g);
                require(encode(dag, s) == g, "encode(decode(g)) != g");
                const CellDag dag2 = decode(encode(dag, s));
                require(dag2 == dag, "decode(encode(d)) != d");
                ++total;
            }
        }
    }
    return std::to_string(total) + " genomes across 9 shapes, zero failures";
}

// ---------------------------------------------------------------------------
// Criterion 2: Eq-3 similarity against direct arithmetic, 1e-12.

double direct_similarity(const Genome& probe, const Population& pop, uint32_t depth) {
    std::vector<std::pair<double, size_t>> ranked;
    const size_t m = pop.members[0].objectives->size();
    std::vector<double> lo(m, 1e300), hi(m, -1e300);
    for (const auto& ind : pop.members) {
        for (size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], (*ind.objectives)[i]);
            hi[i] = std::max(hi[i], (*ind.objectives)[i]);
        }
    }
    for (size_t j = 0; j < pop.members.size(); ++j) {
        double sum = 0.0;
        for (size_t i = 0; i < m; ++i) {
            if (hi[i] > lo[i]) sum += ((*pop.members[j].objectives)[i] - lo[i]) / (hi[i] - lo[i]);
        }
        ranked.emplace_back(sum, j);
    }
    std::sort(ranked.begin(), ranked.end());
    double dot = 0.0;
    for (uint32_t d = 0; d < depth; ++d) {
        const auto& bits = pop.members[ranked[d].second].genome.bits;
        for (size_t k = 0; k < bits.size(); ++k) {
            dot += static_cast<double>(probe.bits[k]) * bits[k];
        }
    }
    return dot / (static_cast<double>(depth) * static_cast<double>(probe.bits.size()));
}

std::string criterion_similarity() {
    const CellShape s = shape_of(2, 4);
    Rng rng(10002);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        Population pop;
        pop.layer_index = 0;
        const size_t n = 3 + rng.below(12);
        for (size_t i = 0; i < n; ++i) {
            Individual ind;
            ind.id = i;
            ind.genome = random_genome(s, 1, rng);
            ind.objectives = ObjectiveVector{rng.uniform01(), rng.uniform01() * 5.0};
            pop.members.push_back(std::move(ind));
        }
        const Genome probe = random_genome(s, 1, rng);
        const uint32_t depth = 1 + static_cast<uint32_t>(rng.below(n));
        const double got = similarity(probe, pop, depth);
        const double want = direct_similarity(probe, pop, depth);
        worst = std::max(worst, std::abs(got - want));
        require(std::abs(got - want) <= 1e-12, "similarity deviates by " + dtos(got - want));

        Genome zeros{s, 1, std::vector<uint8_t>(genome_length(s), 0)};
        require(similarity(zeros, pop, depth) == 0.0, "sim(zeros) != 0");
    }
    return "1000 instances, max |delta| = " + dtos(worst);
}

// ---------------------------------------------------------------------------
// Criterion 3: environmental selection against the O(n^2 M) oracle.

std::string criterion_selection() {
    Rng rng(10003);
    for (int trial = 0; trial < 200; ++trial) {
        const size_t n = 4 + rng.below(61); // <= 64
        const size_t m = 2 + rng.below(2);
        std::vector<Individual> pool;
        for (size_t i = 0; i < n; ++i) {
            Individual ind;
            ind.id = i;
            ind.birth_generation = static_cast<uint32_t>(rng.below(6));
            ind.genome = Genome{shape_of(1, 2), 1, {1, 0, 0, 1}};
            ObjectiveVector v(m);
            v[0] = rng.uniform01();
            for (size_t k = 1; k < m; ++k) v[k] = rng.uniform01() * 8.0;
            ind.objectives = std::move(v);
            pool.push_back(std::move(ind));
        }

        // Oracle front ranks by repeated nondominated scans.
        std::vector<size_t> oracle_rank(n, 0);
        {
            std::vector<bool> done(n, false);
            size_t assigned = 0;
            size_t front = 0;
            while (assigned < n) {
                std::vector<size_t> current;
                for (size_t i = 0; i < n; ++i) {
                    if (done[i]) continue;
                    bool dominated = false;
                    for (size_t j = 0; j < n && !dominated; ++j) {
                        if (!done[j] && j != i) {
                            dominated = dominates(*pool[j].objectives, *pool[i].objectives);
                        }
                    }
                    if (!dominated) current.push_back(i);
                }
                for (size_t i : current) {
                    oracle_rank[i] = front;
                    done[i] = true;
                }
                assigned += current.size();
                ++front;
            }
        }

        const size_t keep = 1 + rng.below(n);
        const auto sel = environmental_selection(pool, keep);
        for (size_t i = 0; i < n; ++i) {
            require(sel.rank[i] == oracle_rank[i], "front assignment mismatch");
        }

        // Independent reconstruction of the selected set, including the
        // documented crowding/age/index tie-break.
        std::vector<size_t> expect;
        size_t front = 0;
        while (expect.size() < keep) {
            std::vector<size_t> members;
            for (size_t i = 0; i < n; ++i) {
                if (oracle_rank[i] == front) members.push_back(i);
            }
            if (members.empty()) break;
            if (expect.size() + members.size() <= keep) {
                expect.insert(expect.end(), members.begin(), members.end());
            } else {
                const size_t m_objs = pool[0].objectives->size();
                std::vector<double> crowd(members.size(), 0.0);
                if (members.size() <= 2) {
                    std::fill(crowd.begin(), crowd.end(), 1e308);
                } else {
                    for (size_t obj = 0; obj < m_objs; ++obj) {
                        std::vector<size_t> order(members.size());
                        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
                        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                            const double va = (*pool[members[a]].objectives)[obj];
                            const double vb = (*pool[members[b]].objectives)[obj];
                            if (va != vb) return va < vb;
                            return members[a] < members[b];
                        });
                        const double lo = (*pool[members[order.front()]].objectives)[obj];
                        const double hi = (*pool[members[order.back()]].objectives)[obj];
                        crowd[order.front()] = 1e308;
                        crowd[order.back()] = 1e308;
                        if (hi <= lo) continue;
                        for (size_t i = 1; i + 1 < order.size(); ++i) {
                            if (crowd[order[i]] >= 1e308) continue;
                            crowd[order[i]] +=
                                ((*pool[members[order[i + 1]]].objectives)[obj] -
                                 (*pool[members[order[i - 1]]].objectives)[obj]) /
                                (hi - lo);
                        }
                    }
                }
                std::vector<size_t> order(members.size());
                for (size_t i = 0; i < order.size(); ++i) order[i] = i;
                std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                    if (crowd[a] != crowd[b]) return crowd[a] > crowd[b];
                    const auto ba = pool[members[a]].birth_generation;
                    const auto bb = pool[members[b]].birth_generation;
                    if (ba != bb) return ba < bb;
                    return members[a] < members[b];
                });
                for (size_t i = 0; expect.size() < keep; ++i) expect.push_back(members[order[i]]);
            }
            ++front;
        }
        std::sort(expect.begin(), expect.end());
        require(sel.selected == expect, "selected set mismatch after tie-break");
    }
    return "200 pools (n<=64, M in {2,3}), exact match";
}

// ---------------------------------------------------------------------------
// Criteria 4-6 share desk-scale run matrices.

SearchConfig pareto_recovery_config(const std::string& table_path) {
    SearchConfig cfg;
    cfg.layers = 3;
    cfg.population_size = 16;
    cfg.generations = 30;
    cfg.intermediate_nodes = 1;
    cfg.num_ops = 2;
    cfg.archive_size = 8;
    cfg.migration.base_count = 4;
    cfg.migration.similarity_depth = 4;
    cfg.migration.max_total = 8;
    cfg.backend = BackendKind::Tabular;
    cfg.table_path = table_path;
    cfg.max_evaluations = 2000; // budget cap
    cfg.warmup_steps = 10;
    cfg.epochs_per_arch_update = 2;
    return cfg;
}

std::string criterion_pareto_recovery() {
    const auto t0 = std::chrono::steady_clock::now();

    const CellShape s = shape_of(1, 2);
    const fs::path table_path = "/tmp/mpae_acceptance_oracle_table.txt";
    const TabularBenchmark table =
        generate_table(s, 3, OpVocabulary::default_for(2), 7, 0.5);
    write_table(table_path, table);

    std::vector<ObjectiveVector> all;
    for (const auto& key : table.key_order) all.push_back(table.lookup(key));
    const auto true_front = pareto_filter(all);
    SearchConfig ref_cfg = pareto_recovery_config(table_path.string());
    const auto ref = hypervolume_reference(ref_cfg);
    const double true_hv = hypervolume_2d(true_front, ref);
    require(true_hv > 0.0, "degenerate oracle front");

    size_t hits = 0;
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        SearchConfig cfg = pareto_recovery_config(table_path.string());
        cfg.seed = seed;
        const RunOutput out = execute_run_in_memory(cfg);
        std::vector<ObjectiveVector> found;
        for (const FrontEntry& e : out.state.best_front) found.push_back(e.objectives);
        const double hv = hypervolume_2d(found, ref);
        if (hv >= 0.95 * true_hv) ++hits;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    require(elapsed.count() < 120000,
            "runtime " + std::to_string(elapsed.count()) + " ms exceeds 2 minutes");
    require(hits >= 18, "only " + std::to_string(hits) + "/20 seeds reached 95% hypervolume");
    return std::to_string(hits) + "/20 seeds >= 95% of true-front hypervolume in " +
           std::to_string(elapsed.count()) + " ms";
}

SearchConfig ablation_config() {
    SearchConfig cfg;
    cfg.layers = 8;
    cfg.population_size = 20;
    cfg.generations = 20;
    cfg.intermediate_nodes = 2;
    cfg.num_ops = 4;
    cfg.archive_size = 6;
    cfg.migration.base_count = 4;
    cfg.migration.similarity_depth = 3;
    cfg.migration.max_total = 12;
    cfg.backend = BackendKind::Synthetic;
    cfg.landscape.seed = 7;
    cfg.landscape.interaction_alpha = 0.35;
    cfg.warmup_steps = 5;
    cfg.epochs_per_arch_update = 1;
    return cfg;
}

struct AblationRuns {
    std::vector<RunState> mpae_states;
    std::vector<double> mpae, coevo, global;
};

const AblationRuns& ablation_runs() {
    static AblationRuns runs = [] {
        AblationRuns r;
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            SearchConfig cfg = ablation_config();
            cfg.seed = seed;
            cfg.searcher = SearcherKind::Mpae;
            RunState m = run_search(cfg);
            r.mpae.push_back(m.best_error);
            r.mpae_states.push_back(std::move(m));
            cfg.searcher = SearcherKind::Coevolution;
            r.coevo.push_back(run_search(cfg).best_error);
            cfg.searcher = SearcherKind::Global;
            r.global.push_back(run_search(cfg).best_error);
        }
        return r;
    }();
    return runs;
}

std::string criterion_ablation_direction() {
    const AblationRuns& r = ablation_runs();
    const auto mc = mann_whitney_less(r.mpae, r.coevo);
    const auto cg = mann_whitney_less(r.coevo, r.global);
    require(mc.p_less < 0.05,
            "mpae vs coevolution not separated: p = " + dtos(mc.p_less));
    require(cg.p_less < 0.05,
            "coevolution vs global not separated: p = " + dtos(cg.p_less));
    return "p(mpae<coevo) = " + dtos(mc.p_less) + ", p(coevo<global) = " + dtos(cg.p_less) +
           ", medians " + dtos(median(r.mpae)) + " / " + dtos(median(r.coevo)) + " / " +
           dtos(median(r.global));
}

std::string criterion_migration_effect() {
    const AblationRuns& r = ablation_runs();
    const uint32_t total = ablation_config().generations;
    size_t favorable = 0;
    std::string detail;
    for (int pct : {25, 50, 75, 100}) {
        const uint32_t gen = std::max<uint32_t>(
            1, static_cast<uint32_t>(std::llround(pct / 100.0 * total)));
        std::vector<double> migrant_sums;
        std::vector<double> offspring_sums;
        for (const RunState& state : r.mpae_states) {
            std::vector<LogRecord> records;
            for (const std::string& line : state.log.lines()) {
                if (line.empty() || line[0] != 'I') continue;
                LogRecord rec = parse_record_line(line);
                if (rec.generation == gen) records.push_back(std::move(rec));
            }
            std::vector<ObjectiveVector> rows;
            for (const auto& rec : records) rows.push_back(rec.objectives);
            const auto sums = normalized_objective_sums(rows);
            for (size_t i = 0; i < records.size(); ++i) {
                if (records[i].origin == Origin::Migrant) migrant_sums.push_back(sums[i]);
                if (records[i].origin == Origin::Offspring) offspring_sums.push_back(sums[i]);
            }
        }
        require(!migrant_sums.empty() && !offspring_sums.empty(),
                "missing origin data at checkpoint " + std::to_string(pct) + "%");
        const double mig = median(migrant_sums);
        const double off = median(offspring_sums);
        if (mig <= off) ++favorable;
        detail += std::to_string(pct) + "%:" + (mig <= off ? "ok " : "worse ");
    }
    require(favorable >= 3, "migrants beat offspring at only " + std::to_string(favorable) +
                                "/4 checkpoints (" + detail + ")");
    return "migrant median <= offspring median at " + std::to_string(favorable) +
           "/4 checkpoints (" + detail + ")";
}

// ---------------------------------------------------------------------------
// Criterion 7: byte-identical event logs across reruns and thread counts.

std::string criterion_determinism() {
    SearchConfig cfg = ablation_config();
    cfg.generations = 6;
    cfg.seed = 99;

    auto log_bytes = [](const SearchConfig& c, const fs::path& path) {
        SearchConfig run_cfg = c;
        Engine engine(run_cfg);
        engine.mutable_state().log.attach_file(path);
        engine.run();
        return read_file(path);
    };
    const fs::path base = "/tmp/mpae_acceptance_logs";
    fs::create_directories(base);
    const std::string t1_a = log_bytes(cfg, base / "t1_a.log");
    const std::string t1_b = log_bytes(cfg, base / "t1_b.log");
    SearchConfig threaded = cfg;
    threaded.threads = 8;
    const std::string t8 = log_bytes(threaded, base / "t8.log");
    require(t1_a == t1_b, "rerun logs differ at 1 thread");
    require(t1_a == t8, "logs differ between 1 and 8 threads");
    require(!t1_a.empty(), "empty event log");
    return std::to_string(t1_a.size()) + " byte logs identical across reruns and 8 threads";
}

// ---------------------------------------------------------------------------
// Criterion 8: empirical operator rates within 5 sigma.

std::string criterion_rates() {
    // Bernoulli(0.5) inclusion.
    const CellShape s = shape_of(1, 2);
    Rng seed_rng(10008);
    std::vector<Population> pops;
    for (uint32_t l = 0; l < 4; ++l) {
        Population pop;
        pop.layer_index = l;
        for (size_t i = 0; i < 8; ++i) {
            Individual ind;
            ind.genome = random_genome(s, 1, seed_rng);
            pop.members.push_back(std::move(ind));
        }
        pops.push_back(std::move(pop));
    }
    Rng draw(10009);
    size_t included = 0;
    size_t inclusion_events = 0;
    for (int trial = 0; trial < 400; ++trial) {
        for (const auto& layer : sample_inclusions(pops, draw, 0.5)) {
            for (uint8_t b : layer) {
                included += b;
                ++inclusion_events;
            }
        }
    }
    require(inclusion_events >= 10000, "not enough inclusion events");
    const double inc_sigma = std::sqrt(inclusion_events * 0.25);
    require(std::abs(included - 0.5 * inclusion_events) <= 5.0 * inc_sigma,
            "inclusion frequency outside 5 sigma");

    // Crossover and mutation at 0.25/node, observed through segment changes.
    const CellShape gs = shape_of(2, 8);
    Rng grng(10010);
    const Genome a = random_genome(gs, 1, grng);
    Genome b = random_genome(gs, 1, grng);
    auto segment = [&](const Genome& g, uint32_t node) {
        const uint32_t off = node_offset(gs, node);
        const uint32_t len = candidate_sources(gs, node) * gs.num_ops;
        return std::vector<uint8_t>(g.bits.begin() + off, g.bits.begin() + off + len);
    };
    while (segment(a, 0) == segment(b, 0) || segment(a, 1) == segment(b, 1)) {
        b = random_genome(gs, 1, grng);
    }
    size_t cx_events = 0;
    size_t swaps = 0;
    Rng cxd(10011);
    for (int trial = 0; trial < 6000; ++trial) {
        const auto [ca, cb] = crossover_mutate_pair(a, b, 0.25, 0.0, cxd);
        for (uint32_t j = 0; j < gs.num_intermediate_nodes; ++j) {
            ++cx_events;
            swaps += segment(ca, j) == segment(b, j);
        }
    }
    require(cx_events >= 10000, "not enough crossover events");
    const double cx_sigma = std::sqrt(cx_events * 0.25 * 0.75);
    require(std::abs(swaps - 0.25 * cx_events) <= 5.0 * cx_sigma,
            "crossover frequency outside 5 sigma");

    size_t mut_events = 0;
    size_t mutated = 0;
    Rng mutd(10012);
    for (int trial = 0; trial < 6000; ++trial) {
        const auto [ca, cb] = crossover_mutate_pair(a, a, 0.0, 0.25, mutd);
        for (const Genome* child : {&ca, &cb}) {
            for (uint32_t j = 0; j < gs.num_intermediate_nodes; ++j) {
                ++mut_events;
                mutated += segment(*child, j) != segment(a, j);
            }
        }
    }
    require(mut_events >= 10000, "not enough mutation events");
    const double mut_sigma = std::sqrt(mut_events * 0.25 * 0.75);
    require(std::abs(mutated - 0.25 * mut_events) <= 5.0 * mut_sigma,
            "mutation frequency outside 5 sigma");

    std::ostringstream detail;
    detail << "inclusion " << included << "/" << inclusion_events << ", crossover " << swaps
           << "/" << cx_events << ", mutation " << mutated << "/" << mut_events;
    return detail.str();
}

// ---------------------------------------------------------------------------
// Criterion 9: exact per-generation budget parity across searchers.

std::string criterion_budget_parity() {
    SearchConfig cfg = ablation_config();
    cfg.generations = 5;
    cfg.seed = 7;

    auto per_generation = [&](SearcherKind kind) {
        SearchConfig c = cfg;
        c.searcher = kind;
        const RunState state = run_search(c);
        std::vector<uint64_t> calls(c.generations + 1, 0);
        for (const std::string& line : state.log.lines()) {
            if (line.empty() || line[0] != 'I') continue;
            const LogRecord rec = parse_record_line(line);
            if (rec.generation >= 1) ++calls[rec.generation];
        }
        calls[0] = state.eval_calls; // total as a cross-check
        return calls;
    };
    const auto m = per_generation(SearcherKind::Mpae);
    const auto c = per_generation(SearcherKind::Coevolution);
    const auto g = per_generation(SearcherKind::Global);
    for (size_t t = 0; t < m.size(); ++t) {
        require(m[t] == c[t], "mpae vs coevolution calls differ at index " + std::to_string(t));
        require(m[t] == g[t], "mpae vs global calls differ at index " + std::to_string(t));
    }
    std::ostringstream detail;
    detail << "totals " << m[0] << ", per-generation ";
    for (size_t t = 1; t < m.size(); ++t) detail << m[t] << (t + 1 < m.size() ? "/" : "");
    return detail.str();
}

struct Criterion {
    int id;
    std::string name;
    std::function<std::string()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "encoding round-trip identities", criterion_round_trip},
        {2, "similarity arithmetic oracle", criterion_similarity},
        {3, "environmental selection oracle", criterion_selection},
        {4, "pareto recovery on the enumerable shape", criterion_pareto_recovery},
        {5, "ablation direction (mpae < coevolution < global)", criterion_ablation_direction},
        {6, "migration effect at generation checkpoints", criterion_migration_effect},
        {7, "byte-identical determinism at 1 and 8 threads", criterion_determinism},
        {8, "empirical operator rates within 5 sigma", criterion_rates},
        {9, "exact per-generation budget parity", criterion_budget_parity},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            const std::string detail = c.run();
            std::printf("[PASS] criterion %d: %s — %s\n", c.id, c.name.c_str(), detail.c_str());
        } catch (const CheckFailure& f) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s — %s\n", c.id, c.name.c_str(), f.detail.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s — unexpected error: %s\n", c.id, c.name.c_str(),
                        e.what());
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    } else {
        std::printf("%d acceptance criteria failed\n", failures);
    }
    return failures;
}
