#include "mpae/checkpoint.hpp"

#include "mpae/errors.hpp"
#include "mpae/util.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>

namespace mpae {

using json = nlohmann::ordered_json;

namespace {

json individual_to_json(const Individual& ind) {
    json j;
    j["id"] = ind.id;
    j["genome"] = ind.genome.hex();
    j["segments"] = ind.genome.segments;
    if (ind.objectives) {
        j["objectives"] = *ind.objectives;
    } else {
        j["objectives"] = nullptr;
    }
    j["origin"] = origin_name(ind.origin);
    j["birth"] = ind.birth_generation;
    return j;
}

Individual individual_from_json(const json& j, const CellShape& shape) {
    Individual ind;
    ind.id = j.at("id").get<uint64_t>();
    ind.genome = genome_from_hex(shape, j.at("segments").get<uint32_t>(),
                                 j.at("genome").get<std::string>());
    if (!j.at("objectives").is_null()) {
        ind.objectives = j.at("objectives").get<ObjectiveVector>();
    }
    ind.origin = origin_from_name(j.at("origin").get<std::string>());
    ind.birth_generation = j.at("birth").get<uint32_t>();
    return ind;
}

} // namespace

std::string serialize_checkpoint(const RunState& state) {
    json j;
    j["format"] = "mpae-checkpoint";
    j["format_version"] = 1;
    j["config"] = json::parse(config_to_json_text(state.config));
    j["generation"] = state.generation;
    j["warmed_up"] = state.warmed_up;
    j["next_id"] = state.next_id;
    j["eval_calls"] = state.eval_calls;
    j["best_error"] = state.best_error;

    json pops = json::array();
    for (const Population& pop : state.populations) {
        json p;
        p["layer"] = pop.layer_index;
        json members = json::array();
        for (const Individual& ind : pop.members) members.push_back(individual_to_json(ind));
        p["members"] = std::move(members);
        json archive = json::array();
        for (const ArchiveEntry& e : pop.archive.members) {
            json a = individual_to_json(e.individual);
            a["rank"] = e.rank;
            a["crowding"] = e.crowding; // +inf handled below
            if (std::isinf(e.crowding)) a["crowding"] = "inf";
            archive.push_back(std::move(a));
        }
        p["archive"] = std::move(archive);
        pops.push_back(std::move(p));
    }
    j["populations"] = std::move(pops);

    json supernet;
    supernet["trained_steps"] = state.supernet.trained_steps();
    supernet["maturity"] = state.supernet.raw();
    j["supernet"] = std::move(supernet);

    json rng;
    rng["global"] = state.rng.global.save_state();
    json pop_rng = json::array();
    for (const Rng& r : state.rng.per_population) pop_rng.push_back(r.save_state());
    rng["populations"] = std::move(pop_rng);
    j["rng"] = std::move(rng);

    json log;
    log["hash"] = state.log.hash();
    log["lines"] = state.log.line_count();
    j["log"] = std::move(log);

    json front = json::array();
    for (const FrontEntry& e : state.best_front) {
        json f;
        f["key"] = e.key;
        f["objectives"] = e.objectives;
        front.push_back(std::move(f));
    }
    j["best_front"] = std::move(front);

    return j.dump(2) + "\n";
}

RunState parse_checkpoint(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("checkpoint: not valid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "mpae-checkpoint") {
        throw VersionMismatchError("checkpoint: missing format marker");
    }
    if (j.value("format_version", 0) != 1) {
        throw VersionMismatchError("checkpoint: unsupported format_version");
    }

    RunState state;
    state.config = config_from_json_text(j.at("config").dump());
    const CellShape shape = state.config.shape();
    state.generation = j.at("generation").get<uint32_t>();
    state.warmed_up = j.at("warmed_up").get<bool>();
    state.next_id = j.at("next_id").get<uint64_t>();
    state.eval_calls = j.at("eval_calls").get<uint64_t>();
    state.best_error = j.at("best_error").get<double>();

    for (const json& p : j.at("populations")) {
        Population pop;
        pop.layer_index = p.at("layer").get<uint32_t>();
        for (const json& m : p.at("members")) {
            pop.members.push_back(individual_from_json(m, shape));
        }
        for (const json& a : p.at("archive")) {
            ArchiveEntry e;
            e.individual = individual_from_json(a, shape);
            e.rank = a.at("rank").get<size_t>();
            if (a.at("crowding").is_string()) {
                e.crowding = std::numeric_limits<double>::infinity();
            } else {
                e.crowding = a.at("crowding").get<double>();
            }
            pop.archive.members.push_back(std::move(e));
        }
        pop.archive.owner_layer = pop.layer_index;
        refresh_best_candidates(pop.archive);
        state.populations.push_back(std::move(pop));
    }

    state.supernet = SupernetState(state.config.layers, shape, state.config.surrogate.eta,
                                   state.config.surrogate.max_maturity);
    state.supernet.restore(j.at("supernet").at("trained_steps").get<uint64_t>(),
                           j.at("supernet").at("maturity").get<std::vector<double>>());

    state.rng = RngStreams(state.config.seed, j.at("rng").at("populations").size());
    state.rng.global.load_state(j.at("rng").at("global").get<std::string>());
    for (size_t i = 0; i < state.rng.per_population.size(); ++i) {
        state.rng.per_population[i].load_state(
            j.at("rng").at("populations").at(i).get<std::string>());
    }

    state.log.restore_counters(j.at("log").at("hash").get<uint64_t>(),
                               j.at("log").at("lines").get<uint64_t>());

    for (const json& f : j.at("best_front")) {
        state.best_front.push_back(
            FrontEntry{f.at("key").get<std::string>(), f.at("objectives").get<ObjectiveVector>()});
    }
    return state;
}

void write_checkpoint(const std::filesystem::path& path, const RunState& state) {
    atomic_write_file(path, serialize_checkpoint(state));
}

RunState load_checkpoint(const std::filesystem::path& path) {
    return parse_checkpoint(read_file(path));
}

} // namespace mpae
