#include "mpae/runner.hpp"

#include "mpae/errors.hpp"
#include "mpae/genotype.hpp"
#include "mpae/hypervolume.hpp"
#include "mpae/parallel.hpp"
#include "mpae/stats.hpp"
#include "mpae/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

namespace mpae {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

int classify_exit(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return kExitConfigError;
    if (dynamic_cast<const VersionMismatchError*>(&e)) return kExitFormatError;
    if (dynamic_cast<const FormatError*>(&e)) return kExitFormatError;
    if (dynamic_cast<const IoError*>(&e)) return kExitIoError;
    if (dynamic_cast<const CapExceededError*>(&e)) return kExitCapExceeded;
    if (dynamic_cast<const MissingKeyError*>(&e)) return kExitEvaluationError;
    if (dynamic_cast<const AbsentStateError*>(&e)) return kExitEvaluationError;
    if (dynamic_cast<const UnevaluatedIndividualError*>(&e)) return kExitEvaluationError;
    return kExitFailure;
}

namespace {

std::string error_type_name(const std::exception& e) {
    switch (classify_exit(e)) {
    case kExitConfigError: return "config";
    case kExitIoError: return "io";
    case kExitFormatError: return "format";
    case kExitEvaluationError: return "evaluation";
    case kExitCapExceeded: return "cap-exceeded";
    default: return "error";
    }
}

// Machine-readable failure record: stderr always, error.json when a
// destination directory is known.
int report_error(const std::exception& e, const fs::path& out_dir) {
    json j;
    j["error"]["type"] = error_type_name(e);
    j["error"]["message"] = e.what();
    std::cerr << j.dump() << "\n";
    if (!out_dir.empty()) {
        try {
            atomic_write_file(out_dir / "error.json", j.dump(2) + "\n");
        } catch (...) {
            // stderr already carries the record
        }
    }
    return classify_exit(e);
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    return line;
}

} // namespace

std::string RunManifest::to_json() const {
    json j;
    j["format"] = "mpae-manifest";
    j["format_version"] = 1;
    j["file_format_versions"] = {{"log", 1}, {"table", 1}, {"genotype", 1},
                                 {"checkpoint", 1}, {"config", 1}};
    j["searcher"] = searcher;
    j["backend"] = backend;
    j["seed"] = seed;
    j["started_at"] = started_at;
    j["out_dir"] = out_dir;
    j["outputs"] = {{"events", "events.log"},
                    {"pareto", "pareto.csv"},
                    {"front", "front"},
                    {"checkpoint", "checkpoint_final.json"},
                    {"summary", "summary.json"}};
    j["config"] = json::parse(config_to_json_text(config));
    return j.dump(2) + "\n";
}

SearchConfig resolve_config(const fs::path& config_path, const RunOverrides& overrides) {
    SearchConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const IoError& e) {
        throw ConfigError("cannot read config file: " + std::string(e.what()));
    }
    if (const char* env_seed = std::getenv("MPAE_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            throw ConfigError("MPAE_SEED is not a number: '" + std::string(env_seed) + "'");
        }
    }
    if (overrides.seed) cfg.seed = *overrides.seed;
    if (overrides.threads) cfg.threads = *overrides.threads;
    cfg.validate();
    return cfg;
}

fs::path resolve_out_dir(const std::string& cli_out_dir) {
    if (!cli_out_dir.empty()) return cli_out_dir;
    if (const char* env = std::getenv("MPAE_OUT")) {
        if (*env) return env;
    }
    throw ConfigError("no output directory (pass --out or set MPAE_OUT)");
}

std::array<double, 2> hypervolume_reference(const SearchConfig& cfg) {
    const OpVocabulary vocab = OpVocabulary::default_for(cfg.num_ops);
    const double max_cost = *std::max_element(vocab.costs.begin(), vocab.costs.end());
    const double max_size =
        max_cost * 2.0 * cfg.intermediate_nodes * static_cast<double>(cfg.layers);
    return {1.0, max_size * 1.1};
}

namespace {

GenerationSample take_sample(const Engine& engine, const std::array<double, 2>& ref) {
    std::vector<ObjectiveVector> pts;
    pts.reserve(engine.state().best_front.size());
    for (const FrontEntry& e : engine.state().best_front) pts.push_back(e.objectives);
    GenerationSample s;
    s.generation = engine.state().generation;
    s.eval_calls = engine.state().eval_calls;
    s.best_error = engine.state().best_error;
    s.front_size = engine.state().best_front.size();
    s.hypervolume = hypervolume_2d(pts, ref);
    return s;
}

std::vector<FrontEntry> sorted_front(const RunState& state) {
    std::vector<FrontEntry> front = state.best_front;
    std::sort(front.begin(), front.end(), [](const FrontEntry& a, const FrontEntry& b) {
        if (a.objectives[0] != b.objectives[0]) return a.objectives[0] < b.objectives[0];
        if (a.objectives[1] != b.objectives[1]) return a.objectives[1] < b.objectives[1];
        return a.key < b.key;
    });
    return front;
}

std::string front_csv(const std::vector<FrontEntry>& front) {
    std::string csv = "# mpae-front-csv v1\nkey,error,size\n";
    for (const FrontEntry& e : front) {
        csv += e.key + "," + dtos(e.objectives[0]) + "," + dtos(e.objectives[1]) + "\n";
    }
    return csv;
}

std::string pareto_csv(const std::vector<GenerationSample>& samples) {
    std::string csv = "# mpae-pareto-csv v1\ngeneration,evals,best_error,front_size,hypervolume\n";
    for (const GenerationSample& s : samples) {
        csv += std::to_string(s.generation) + "," + std::to_string(s.eval_calls) + "," +
               dtos(s.best_error) + "," + std::to_string(s.front_size) + "," +
               dtos(s.hypervolume) + "\n";
    }
    return csv;
}

RunOutput drive_engine(Engine& engine, const SearchConfig& cfg,
                       const std::function<void(Engine&, uint32_t)>& per_generation) {
    const auto ref = hypervolume_reference(cfg);
    RunOutput out;
    if (engine.state().populations.empty()) engine.initialize();
    if (!engine.state().warmed_up) engine.warm_up();
    out.samples.push_back(take_sample(engine, ref));
    while (engine.state().generation < cfg.generations && !engine.budget_exhausted()) {
        engine.evolve_generation();
        out.samples.push_back(take_sample(engine, ref));
        if (per_generation) per_generation(engine, engine.state().generation);
    }
    out.state = std::move(engine.mutable_state());
    return out;
}

RunOutput finish_run(Engine& engine, const SearchConfig& cfg, const fs::path& out_dir,
                     const std::chrono::steady_clock::time_point& t0) {
    RunOutput out = drive_engine(engine, cfg, [&](Engine& eng, uint32_t gen) {
        if (cfg.checkpoint_every != 0 && gen % cfg.checkpoint_every == 0) {
            write_checkpoint(out_dir / ("checkpoint_gen" + std::to_string(gen) + ".json"),
                             eng.state());
        }
    });
    const auto t1 = std::chrono::steady_clock::now();

    write_checkpoint(out_dir / "checkpoint_final.json", out.state);
    atomic_write_file(out_dir / "pareto.csv", pareto_csv(out.samples));

    const auto front = sorted_front(out.state);
    atomic_write_file(out_dir / "front" / "front.csv", front_csv(front));
    const OpVocabulary vocab = OpVocabulary::default_for(cfg.num_ops);
    for (size_t i = 0; i < front.size(); ++i) {
        const Genome g = genome_from_hex(cfg.shape(), cfg.layers, front[i].key);
        atomic_write_file(out_dir / "front" / ("arch_" + std::to_string(i) + ".genotype.txt"),
                          serialize_genotype(g, vocab));
    }

    json summary;
    summary["ended_at"] = iso8601_utc_now();
    summary["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    summary["generations_completed"] = out.state.generation;
    summary["eval_calls"] = out.state.eval_calls;
    summary["best_error"] = out.state.best_error;
    summary["front_size"] = front.size();
    summary["state_hash"] = out.state.state_hash();
    summary["log_hash"] = out.state.log.hash();
    summary["log_lines"] = out.state.log.line_count();
    atomic_write_file(out_dir / "summary.json", summary.dump(2) + "\n");
    return out;
}

void write_manifest(const SearchConfig& cfg, const fs::path& out_dir) {
    RunManifest manifest;
    manifest.config = cfg;
    manifest.seed = cfg.seed;
    manifest.searcher = searcher_name(cfg.searcher);
    manifest.backend = backend_name(cfg.backend);
    manifest.started_at = iso8601_utc_now();
    manifest.out_dir = out_dir.string();
    atomic_write_file(out_dir / "manifest.json", manifest.to_json());
}

} // namespace

RunOutput execute_run(const SearchConfig& cfg, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    write_manifest(cfg, out_dir);
    const auto t0 = std::chrono::steady_clock::now();
    Engine engine(cfg);
    engine.mutable_state().log.attach_file(out_dir / "events.log");
    return finish_run(engine, cfg, out_dir, t0);
}

RunOutput execute_run_in_memory(const SearchConfig& cfg) {
    Engine engine(cfg);
    return drive_engine(engine, cfg, nullptr);
}

int cmd_search(const fs::path& config_path, const std::string& out_dir,
               const RunOverrides& overrides) {
    fs::path out;
    try {
        out = resolve_out_dir(out_dir);
        const SearchConfig cfg = resolve_config(config_path, overrides);
        execute_run(cfg, out);
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, out);
    }
}

int cmd_resume(const fs::path& checkpoint_path, const std::string& out_dir) {
    fs::path out;
    try {
        out = resolve_out_dir(out_dir);
        fs::create_directories(out);
        RunState state = load_checkpoint(checkpoint_path);
        const SearchConfig cfg = state.config;
        write_manifest(cfg, out);
        const auto t0 = std::chrono::steady_clock::now();
        Engine engine(std::move(state), Engine::make_base_evaluator(cfg));
        // The continuation gets its own log segment; prior counters stand,
        // so the final log digest matches an uninterrupted run.
        engine.mutable_state().log.attach_file(out / "events.log");
        finish_run(engine, cfg, out, t0);
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, out);
    }
}

namespace {

TabularBenchmark oracle_table_for(const OracleSpec& spec) {
    CellShape shape;
    shape.num_intermediate_nodes = spec.intermediate_nodes;
    shape.num_ops = spec.num_ops;
    const OpVocabulary vocab = OpVocabulary::default_for(spec.num_ops);
    if (spec.backend == "synthetic") {
        return generate_table(shape, spec.layers, vocab, spec.landscape_seed,
                              spec.interaction_alpha, spec.cap);
    }
    if (spec.backend != "tabular") {
        throw ConfigError("oracle backend must be synthetic or tabular");
    }
    if (spec.table_path.empty()) throw ConfigError("oracle tabular backend needs --table");
    TabularBenchmark table = load_table(spec.table_path);
    const uint64_t expect = count_architectures(table.shape, table.layers, spec.cap);
    if (table.key_order.size() != expect) {
        throw FormatError("table covers " + std::to_string(table.key_order.size()) +
                          " of " + std::to_string(expect) + " architectures");
    }
    return table;
}

} // namespace

int cmd_oracle(const OracleSpec& spec, const std::string& out_dir) {
    fs::path out;
    try {
        out = resolve_out_dir(out_dir);
        fs::create_directories(out);
        const TabularBenchmark table = oracle_table_for(spec);
        write_table(out / "table.txt", table);

        std::vector<FrontEntry> entries;
        entries.reserve(table.key_order.size());
        for (const auto& key : table.key_order) {
            entries.push_back(FrontEntry{key, table.lookup(key)});
        }
        std::vector<ObjectiveVector> pts;
        pts.reserve(entries.size());
        for (const auto& e : entries) pts.push_back(e.objectives);
        const auto front_pts = pareto_filter(pts);

        std::vector<FrontEntry> front;
        for (const auto& e : entries) {
            if (std::find(front_pts.begin(), front_pts.end(), e.objectives) != front_pts.end()) {
                front.push_back(e);
            }
        }
        std::sort(front.begin(), front.end(), [](const FrontEntry& a, const FrontEntry& b) {
            if (a.objectives[0] != b.objectives[0]) return a.objectives[0] < b.objectives[0];
            if (a.objectives[1] != b.objectives[1]) return a.objectives[1] < b.objectives[1];
            return a.key < b.key;
        });
        // Self check: the emitted front must be internally nondominated.
        for (size_t i = 0; i < front.size(); ++i) {
            for (size_t j = 0; j < front.size(); ++j) {
                if (i != j && dominates(front[i].objectives, front[j].objectives)) {
                    throw FormatError("oracle front self-check failed");
                }
            }
        }
        atomic_write_file(out / "front.csv", front_csv(front));

        SearchConfig ref_cfg;
        ref_cfg.layers = spec.layers;
        ref_cfg.intermediate_nodes = spec.intermediate_nodes;
        ref_cfg.num_ops = spec.num_ops;
        const auto ref = hypervolume_reference(ref_cfg);
        std::vector<ObjectiveVector> front_objs;
        for (const auto& e : front) front_objs.push_back(e.objectives);

        json summary;
        summary["architectures"] = table.key_order.size();
        summary["front_size"] = front.size();
        summary["hypervolume"] = hypervolume_2d(front_objs, ref);
        summary["reference"] = {ref[0], ref[1]};
        atomic_write_file(out / "oracle_summary.json", summary.dump(2) + "\n");
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, out);
    }
}

int cmd_gen_table(const OracleSpec& spec, const std::string& out_path) {
    try {
        if (out_path.empty()) throw ConfigError("gen-table needs an output path");
        if (spec.backend != "synthetic") {
            throw ConfigError("gen-table generates from the synthetic landscape only");
        }
        const TabularBenchmark table = oracle_table_for(spec);
        write_table(out_path, table);
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, fs::path());
    }
}

namespace {

struct CompareCell {
    std::string label;
    uint64_t seed = 0;
    bool failed = false;
    std::string error_type;
    std::string error_message;
    int64_t wall_ms = 0;
    RunOutput output;
};

struct OriginStat {
    size_t count = 0;
    double median_sum = 0.0;
    double mean_sum = 0.0;
};

// Per-origin normalized-objective-sum stats of the records born in
// `generation`, normalized within that generation's full pool.
std::map<std::string, std::vector<double>> origin_sums_at(const RunState& state,
                                                          uint32_t generation) {
    std::vector<LogRecord> records;
    for (const std::string& line : state.log.lines()) {
        if (line.empty() || line[0] != 'I') continue;
        LogRecord r = parse_record_line(line);
        if (r.generation == generation) records.push_back(std::move(r));
    }
    std::map<std::string, std::vector<double>> by_origin;
    if (records.empty()) return by_origin;
    std::vector<ObjectiveVector> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back(r.objectives);
    const auto sums = normalized_objective_sums(rows);
    for (size_t i = 0; i < records.size(); ++i) {
        by_origin[origin_name(records[i].origin)].push_back(sums[i]);
    }
    return by_origin;
}

} // namespace

int cmd_compare(const CompareSpec& spec, const std::string& out_dir) {
    fs::path out;
    try {
        out = resolve_out_dir(out_dir);
        if (spec.config_paths.size() < 2) throw ConfigError("compare needs >= 2 configs");
        if (spec.seeds.size() < 2) throw ConfigError("compare needs >= 2 seeds");
        fs::create_directories(out);

        // Labels from config stems, deduplicated by suffix.
        std::vector<SearchConfig> configs;
        std::vector<std::string> labels;
        std::map<std::string, int> seen;
        for (const auto& path : spec.config_paths) {
            SearchConfig cfg = resolve_config(path, RunOverrides{});
            cfg.threads = 1; // matrix cells run single threaded
            configs.push_back(cfg);
            std::string label = path.stem().string();
            const int n = ++seen[label];
            if (n > 1) label += "_" + std::to_string(n);
            labels.push_back(label);
        }

        std::optional<double> oracle_hv;
        if (spec.oracle_table) {
            const TabularBenchmark table = load_table(*spec.oracle_table);
            std::vector<ObjectiveVector> pts;
            for (const auto& key : table.key_order) pts.push_back(table.lookup(key));
            const auto front = pareto_filter(pts);
            SearchConfig ref_cfg;
            ref_cfg.layers = table.layers;
            ref_cfg.intermediate_nodes = table.shape.num_intermediate_nodes;
            ref_cfg.num_ops = table.shape.num_ops;
            oracle_hv = hypervolume_2d(front, hypervolume_reference(ref_cfg));
        }

        std::vector<CompareCell> cells(configs.size() * spec.seeds.size());
        parallel_for(cells.size(), spec.threads, [&](size_t i) {
            const size_t c = i / spec.seeds.size();
            const size_t s = i % spec.seeds.size();
            CompareCell& cell = cells[i];
            cell.label = labels[c];
            cell.seed = spec.seeds[s];
            SearchConfig cfg = configs[c];
            cfg.seed = spec.seeds[s];
            const auto cell_t0 = std::chrono::steady_clock::now();
            try {
                cell.output = execute_run_in_memory(cfg);
            } catch (const std::exception& e) {
                cell.failed = true;
                cell.error_type = error_type_name(e);
                cell.error_message = e.what();
            }
            cell.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - cell_t0)
                               .count();
        });

        // convergence.csv
        {
            std::string csv = "# mpae-convergence-csv v1\nlabel,seed,generation,evals,best_error\n";
            for (const CompareCell& cell : cells) {
                if (cell.failed) continue;
                for (const GenerationSample& s : cell.output.samples) {
                    csv += csv_join({cell.label, std::to_string(cell.seed),
                                     std::to_string(s.generation), std::to_string(s.eval_calls),
                                     dtos(s.best_error)}) +
                           "\n";
                }
            }
            atomic_write_file(out / "convergence.csv", csv);
        }

        // hypervolume.csv
        {
            std::string csv = "# mpae-hypervolume-csv v1\n";
            csv += oracle_hv ? "label,seed,generation,evals,hypervolume,hypervolume_ratio\n"
                             : "label,seed,generation,evals,hypervolume\n";
            for (const CompareCell& cell : cells) {
                if (cell.failed) continue;
                for (const GenerationSample& s : cell.output.samples) {
                    std::vector<std::string> fields = {
                        cell.label, std::to_string(cell.seed), std::to_string(s.generation),
                        std::to_string(s.eval_calls), dtos(s.hypervolume)};
                    if (oracle_hv) {
                        fields.push_back(dtos(*oracle_hv > 0 ? s.hypervolume / *oracle_hv : 0.0));
                    }
                    csv += csv_join(fields) + "\n";
                }
            }
            atomic_write_file(out / "hypervolume.csv", csv);
        }

        // origin_summary.csv at the 25/50/75/100% generation checkpoints
        {
            std::string csv =
                "# mpae-origin-summary-csv v1\n"
                "label,checkpoint_pct,generation,origin,count,median_objective_sum,mean_objective_sum\n";
            for (size_t c = 0; c < configs.size(); ++c) {
                const uint32_t total_gens = configs[c].generations;
                std::vector<std::pair<int, uint32_t>> checkpoints;
                for (int pct : {25, 50, 75, 100}) {
                    const uint32_t gen = std::max<uint32_t>(
                        1, static_cast<uint32_t>(std::llround(pct / 100.0 * total_gens)));
                    checkpoints.emplace_back(pct, gen);
                }
                for (const auto& [pct, gen] : checkpoints) {
                    std::map<std::string, std::vector<double>> pooled;
                    for (const CompareCell& cell : cells) {
                        if (cell.failed || cell.label != labels[c]) continue;
                        for (auto& [origin, sums] : origin_sums_at(cell.output.state, gen)) {
                            auto& dst = pooled[origin];
                            dst.insert(dst.end(), sums.begin(), sums.end());
                        }
                    }
                    for (const auto& [origin, sums] : pooled) {
                        double mean = 0.0;
                        for (double v : sums) mean += v;
                        mean /= static_cast<double>(sums.size());
                        csv += csv_join({labels[c], std::to_string(pct), std::to_string(gen),
                                         origin, std::to_string(sums.size()),
                                         dtos(median(sums)), dtos(mean)}) +
                               "\n";
                    }
                }
            }
            atomic_write_file(out / "origin_summary.csv", csv);
        }

        // mannwhitney.csv over final best error, one row per ordered pair
        {
            std::string csv =
                "# mpae-mannwhitney-csv v1\n"
                "label_a,label_b,metric,n_a,n_b,u_greater,p_a_less_b,median_a,median_b,median_diff\n";
            std::map<std::string, std::vector<double>> finals;
            for (const CompareCell& cell : cells) {
                if (cell.failed) continue;
                finals[cell.label].push_back(cell.output.state.best_error);
            }
            for (size_t a = 0; a < labels.size(); ++a) {
                for (size_t b = 0; b < labels.size(); ++b) {
                    if (a == b) continue;
                    const auto& xa = finals[labels[a]];
                    const auto& xb = finals[labels[b]];
                    if (xa.empty() || xb.empty()) continue;
                    const auto mw = mann_whitney_less(xa, xb);
                    const double med_a = median(xa);
                    const double med_b = median(xb);
                    csv += csv_join({labels[a], labels[b], "final_best_error",
                                     std::to_string(xa.size()), std::to_string(xb.size()),
                                     dtos(mw.u_greater), dtos(mw.p_less), dtos(med_a),
                                     dtos(med_b), dtos(med_a - med_b)}) +
                           "\n";
                }
            }
            atomic_write_file(out / "mannwhitney.csv", csv);
        }

        // timings.json: wall clock per cell, the one non-reproducible output
        {
            json timings = json::array();
            for (const CompareCell& cell : cells) {
                json row;
                row["label"] = cell.label;
                row["seed"] = cell.seed;
                row["wall_ms"] = cell.wall_ms;
                row["failed"] = cell.failed;
                timings.push_back(std::move(row));
            }
            json doc;
            doc["format"] = "mpae-timings";
            doc["format_version"] = 1;
            doc["cells"] = std::move(timings);
            atomic_write_file(out / "timings.json", doc.dump(2) + "\n");
        }

        // failures.csv
        size_t failures = 0;
        {
            std::string csv = "# mpae-failures-csv v1\nlabel,seed,error_type,message\n";
            for (const CompareCell& cell : cells) {
                if (!cell.failed) continue;
                ++failures;
                std::string msg = cell.error_message;
                std::replace(msg.begin(), msg.end(), ',', ';');
                std::replace(msg.begin(), msg.end(), '\n', ' ');
                csv += csv_join({cell.label, std::to_string(cell.seed), cell.error_type, msg}) +
                       "\n";
            }
            atomic_write_file(out / "failures.csv", csv);
        }
        return failures == 0 ? kExitOk : kExitFailure;
    } catch (const std::exception& e) {
        return report_error(e, out);
    }
}

int cmd_export(const fs::path& checkpoint_path, const std::string& format,
               const std::string& out_dir, std::optional<uint32_t> layer) {
    fs::path out;
    try {
        out = resolve_out_dir(out_dir);
        fs::create_directories(out);
        const RunState state = load_checkpoint(checkpoint_path);
        const OpVocabulary vocab = OpVocabulary::default_for(state.config.num_ops);

        if (format == "checkpoint") {
            atomic_write_file(out / "checkpoint.json", serialize_checkpoint(state));
            return kExitOk;
        }
        if (format == "front") {
            const auto front = sorted_front(state);
            atomic_write_file(out / "front.csv", front_csv(front));
            for (size_t i = 0; i < front.size(); ++i) {
                const Genome g =
                    genome_from_hex(state.config.shape(), state.config.layers, front[i].key);
                atomic_write_file(out / ("arch_" + std::to_string(i) + ".genotype.txt"),
                                  serialize_genotype(g, vocab));
            }
            return kExitOk;
        }
        if (format != "archives") {
            throw ConfigError("export format must be archives, front or checkpoint");
        }
        for (const Population& pop : state.populations) {
            if (layer && pop.layer_index != *layer) continue;
            std::ostringstream doc;
            for (const ArchiveEntry& e : pop.archive.members) {
                doc << serialize_genotype(e.individual.genome, vocab);
                doc << "objectives:";
                for (double v : e.individual.objs()) doc << ' ' << dtos(v);
                doc << "\n---\n";
            }
            atomic_write_file(out / ("archive_layer" + std::to_string(pop.layer_index) + ".txt"),
                              doc.str());
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, out);
    }
}

} // namespace mpae
