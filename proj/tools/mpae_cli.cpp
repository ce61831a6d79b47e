// Command line front end for the mpae search engine.
//
//   mpae search    run a configured search, writing logs and exports
//   mpae oracle    exhaustively enumerate a small space, emit table + front
//   mpae gen-table emit a complete tabular benchmark for a small space
//   mpae compare   run a searcher/seed matrix and emit comparison CSVs
//   mpae export    dump archives, fronts or a normalized checkpoint

#include "mpae/runner.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"multi-population alternate-evolution architecture search"};
    app.require_subcommand(1);

    // search
    std::string search_config;
    std::string search_out;
    std::optional<uint64_t> search_seed;
    std::optional<uint32_t> search_threads;
    auto* search = app.add_subcommand("search", "run a search from a config file");
    search->add_option("--config", search_config, "config JSON path")->required();
    search->add_option("--out", search_out, "output directory (or MPAE_OUT)");
    search->add_option("--seed", search_seed, "override the config seed (or MPAE_SEED)");
    search->add_option("--threads", search_threads, "override evaluation thread count");

    // resume
    std::string resume_checkpoint;
    std::string resume_out;
    auto* resume = app.add_subcommand("resume", "continue a checkpointed run");
    resume->add_option("--checkpoint", resume_checkpoint, "checkpoint JSON path")->required();
    resume->add_option("--out", resume_out, "output directory (or MPAE_OUT)");

    // shared shape options for oracle / gen-table
    mpae::OracleSpec oracle_spec;
    std::string oracle_out;
    auto add_shape_options = [&](CLI::App* cmd) {
        cmd->add_option("--layers", oracle_spec.layers, "network layers");
        cmd->add_option("--nodes", oracle_spec.intermediate_nodes, "intermediate nodes per cell");
        cmd->add_option("--ops", oracle_spec.num_ops, "operation vocabulary size");
        cmd->add_option("--landscape-seed", oracle_spec.landscape_seed, "synthetic landscape seed");
        cmd->add_option("--alpha", oracle_spec.interaction_alpha,
                        "adjacent-layer interaction weight");
        cmd->add_option("--cap", oracle_spec.cap, "enumeration cap (0 = default 1e6)");
    };
    auto* oracle = app.add_subcommand("oracle", "enumerate a space, write table and true front");
    add_shape_options(oracle);
    oracle->add_option("--backend", oracle_spec.backend, "synthetic or tabular");
    oracle->add_option("--table", oracle_spec.table_path, "table path for tabular backend");
    oracle->add_option("--out", oracle_out, "output directory (or MPAE_OUT)");

    std::string table_out;
    auto* gen_table = app.add_subcommand("gen-table", "emit a complete tabular benchmark");
    add_shape_options(gen_table);
    gen_table->add_option("--out", table_out, "output table path")->required();

    // compare
    std::vector<std::string> compare_configs;
    std::vector<uint64_t> compare_seeds;
    std::string compare_out;
    std::string compare_oracle_table;
    uint32_t compare_threads = 1;
    auto* compare = app.add_subcommand("compare", "run a config/seed matrix and emit statistics");
    compare->add_option("--config", compare_configs, "config JSON path (repeat >= 2)")
        ->required()
        ->expected(-2);
    compare->add_option("--seeds", compare_seeds, "seeds (>= 2)")->required()->expected(-2);
    compare->add_option("--out", compare_out, "output directory (or MPAE_OUT)");
    compare->add_option("--oracle-table", compare_oracle_table,
                        "oracle table for hypervolume normalization");
    compare->add_option("--threads", compare_threads, "parallel matrix cells");

    // export
    std::string export_checkpoint;
    std::string export_format = "archives";
    std::string export_out;
    std::optional<uint32_t> export_layer;
    auto* exp = app.add_subcommand("export", "dump archives, front or checkpoint");
    exp->add_option("--checkpoint", export_checkpoint, "checkpoint JSON path")->required();
    exp->add_option("--format", export_format, "archives | front | checkpoint");
    exp->add_option("--out", export_out, "output directory (or MPAE_OUT)");
    exp->add_option("--layer", export_layer, "restrict archive dump to one layer");

    CLI11_PARSE(app, argc, argv);

    if (search->parsed()) {
        mpae::RunOverrides overrides;
        overrides.seed = search_seed;
        overrides.threads = search_threads;
        return mpae::cmd_search(search_config, search_out, overrides);
    }
    if (resume->parsed()) {
        return mpae::cmd_resume(resume_checkpoint, resume_out);
    }
    if (oracle->parsed()) {
        return mpae::cmd_oracle(oracle_spec, oracle_out);
    }
    if (gen_table->parsed()) {
        return mpae::cmd_gen_table(oracle_spec, table_out);
    }
    if (compare->parsed()) {
        mpae::CompareSpec spec;
        for (const auto& c : compare_configs) spec.config_paths.emplace_back(c);
        spec.seeds = compare_seeds;
        if (!compare_oracle_table.empty()) spec.oracle_table = compare_oracle_table;
        spec.threads = compare_threads;
        return mpae::cmd_compare(spec, compare_out);
    }
    if (exp->parsed()) {
        return mpae::cmd_export(export_checkpoint, export_format, export_out, export_layer);
    }
    return mpae::kExitFailure;
}
