#include "mpae/config.hpp"

#include "mpae/errors.hpp"
#include "mpae/util.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <set>

namespace mpae {

using json = nlohmann::ordered_json;

const char* searcher_name(SearcherKind k) {
    switch (k) {
    case SearcherKind::Mpae: return "mpae";
    case SearcherKind::Coevolution: return "coevolution";
    case SearcherKind::Global: return "global";
    }
    throw ArgumentError("unknown searcher kind");
}

SearcherKind searcher_from_name(const std::string& name) {
    if (name == "mpae") return SearcherKind::Mpae;
    if (name == "coevolution") return SearcherKind::Coevolution;
    if (name == "global") return SearcherKind::Global;
    throw ConfigError("unknown searcher: '" + name + "'");
}

CellShape SearchConfig::shape() const {
    CellShape s;
    s.num_intermediate_nodes = intermediate_nodes;
    s.num_ops = num_ops;
    return s;
}

uint32_t SearchConfig::effective_warmup() const {
    if (warmup_steps >= 0) return static_cast<uint32_t>(warmup_steps);
    const double search_epochs = static_cast<double>(generations) * layers * epochs_per_arch_update;
    return static_cast<uint32_t>(std::llround(search_epochs / 9.0));
}

void SearchConfig::validate() const {
    shape().validate();
    if (layers < 1) throw ConfigError("layers must be >= 1");
    if (population_size < 2) throw ConfigError("population_size must be >= 2");
    if (generations < 1) throw ConfigError("generations must be >= 1");
    if (epochs_per_arch_update < 1) throw ConfigError("epochs_per_arch_update must be >= 1");
    if (crossover_rate < 0.0 || crossover_rate > 1.0) throw ConfigError("crossover_rate must lie in [0,1]");
    if (mutation_rate < 0.0 || mutation_rate > 1.0) throw ConfigError("mutation_rate must lie in [0,1]");
    if (archive_size < 1 || archive_size > population_size) {
        throw ConfigError("archive_size must lie in [1, population_size]");
    }
    migration.validate(archive_size, population_size);
    if (!(surrogate.eta > 0.0)) throw ConfigError("surrogate_eta must be > 0");
    if (!(surrogate.max_maturity > 0.0)) throw ConfigError("surrogate_max_maturity must be > 0");
    if (surrogate.eta > surrogate.max_maturity) {
        throw ConfigError("surrogate_eta must not exceed surrogate_max_maturity");
    }
    if (surrogate.lambda < 0.0) throw ConfigError("surrogate_lambda must be >= 0");
    if (landscape.interaction_alpha < 0.0 || landscape.interaction_alpha > 1.0) {
        throw ConfigError("landscape_interaction must lie in [0,1]");
    }
    const bool needs_table = backend == BackendKind::Tabular ||
                             (backend == BackendKind::Surrogate &&
                              surrogate_base == BackendKind::Tabular);
    if (needs_table && table_path.empty()) {
        throw ConfigError("tabular backend requires table_path");
    }
    if (surrogate_base == BackendKind::Surrogate) {
        throw ConfigError("surrogate_base must be synthetic or tabular");
    }
    if (threads < 1) throw ConfigError("threads must be >= 1");
}

namespace {

const std::set<std::string> kKnownKeys = {
    "format_version", "searcher", "backend", "surrogate_base", "table_path",
    "layers", "population_size", "generations", "warmup_steps",
    "epochs_per_arch_update", "crossover_rate", "mutation_rate",
    "intermediate_nodes", "num_ops", "archive_size", "migration_base_count",
    "similarity_depth", "migration_max_total", "max_evaluations", "seed",
    "threads", "checkpoint_every", "surrogate_eta", "surrogate_max_maturity",
    "surrogate_lambda", "landscape_seed", "landscape_interaction",
};

template <typename T>
void read_field(const json& j, const char* key, T& out) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

} // namespace

SearchConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (!kKnownKeys.count(key)) throw ConfigError("unknown config key: '" + key + "'");
    }
    if (j.contains("format_version") && j.at("format_version").get<int>() != 1) {
        throw VersionMismatchError("config: unsupported format_version");
    }

    SearchConfig cfg;
    std::string searcher = searcher_name(cfg.searcher);
    std::string backend = backend_name(cfg.backend);
    std::string surrogate_base = backend_name(cfg.surrogate_base);
    read_field(j, "searcher", searcher);
    read_field(j, "backend", backend);
    read_field(j, "surrogate_base", surrogate_base);
    cfg.searcher = searcher_from_name(searcher);
    cfg.backend = backend_from_name(backend);
    cfg.surrogate_base = backend_from_name(surrogate_base);

    read_field(j, "table_path", cfg.table_path);
    read_field(j, "layers", cfg.layers);
    read_field(j, "population_size", cfg.population_size);
    read_field(j, "generations", cfg.generations);
    read_field(j, "warmup_steps", cfg.warmup_steps);
    read_field(j, "epochs_per_arch_update", cfg.epochs_per_arch_update);
    read_field(j, "crossover_rate", cfg.crossover_rate);
    read_field(j, "mutation_rate", cfg.mutation_rate);
    read_field(j, "intermediate_nodes", cfg.intermediate_nodes);
    read_field(j, "num_ops", cfg.num_ops);
    read_field(j, "archive_size", cfg.archive_size);
    read_field(j, "migration_base_count", cfg.migration.base_count);
    read_field(j, "similarity_depth", cfg.migration.similarity_depth);
    read_field(j, "migration_max_total", cfg.migration.max_total);
    read_field(j, "max_evaluations", cfg.max_evaluations);
    read_field(j, "seed", cfg.seed);
    read_field(j, "threads", cfg.threads);
    read_field(j, "checkpoint_every", cfg.checkpoint_every);
    read_field(j, "surrogate_eta", cfg.surrogate.eta);
    read_field(j, "surrogate_max_maturity", cfg.surrogate.max_maturity);
    read_field(j, "surrogate_lambda", cfg.surrogate.lambda);
    read_field(j, "landscape_seed", cfg.landscape.seed);
    read_field(j, "landscape_interaction", cfg.landscape.interaction_alpha);

    cfg.validate();
    return cfg;
}

std::string config_to_json_text(const SearchConfig& cfg) {
    json j;
    j["format_version"] = 1;
    j["searcher"] = searcher_name(cfg.searcher);
    j["backend"] = backend_name(cfg.backend);
    j["surrogate_base"] = backend_name(cfg.surrogate_base);
    j["table_path"] = cfg.table_path;
    j["layers"] = cfg.layers;
    j["population_size"] = cfg.population_size;
    j["generations"] = cfg.generations;
    j["warmup_steps"] = cfg.warmup_steps;
    j["epochs_per_arch_update"] = cfg.epochs_per_arch_update;
    j["crossover_rate"] = cfg.crossover_rate;
    j["mutation_rate"] = cfg.mutation_rate;
    j["intermediate_nodes"] = cfg.intermediate_nodes;
    j["num_ops"] = cfg.num_ops;
    j["archive_size"] = cfg.archive_size;
    j["migration_base_count"] = cfg.migration.base_count;
    j["similarity_depth"] = cfg.migration.similarity_depth;
    j["migration_max_total"] = cfg.migration.max_total;
    j["max_evaluations"] = cfg.max_evaluations;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["checkpoint_every"] = cfg.checkpoint_every;
    j["surrogate_eta"] = cfg.surrogate.eta;
    j["surrogate_max_maturity"] = cfg.surrogate.max_maturity;
    j["surrogate_lambda"] = cfg.surrogate.lambda;
    j["landscape_seed"] = cfg.landscape.seed;
    j["landscape_interaction"] = cfg.landscape.interaction_alpha;
    return j.dump(2) + "\n";
}

SearchConfig load_config(const std::filesystem::path& path) {
    return config_from_json_text(read_file(path));
}

void save_config(const std::filesystem::path& path, const SearchConfig& cfg) {
    atomic_write_file(path, config_to_json_text(cfg));
}

} // namespace mpae
