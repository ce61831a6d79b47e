#ifndef MPAE_RUNNER_HPP
#define MPAE_RUNNER_HPP

#include "mpae/baselines.hpp"
#include "mpae/checkpoint.hpp"
#include "mpae/table.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mpae {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
    kExitFormatError = 4,
    kExitEvaluationError = 5,
    kExitCapExceeded = 6,
};

int classify_exit(const std::exception& e);

// Run metadata written atomically before the first generation and immutable
// afterwards; completion data (end timestamp, wall clock, totals) goes to
// summary.json instead. Timestamps are the only non-reproducible fields any
// command emits.
struct RunManifest {
    SearchConfig config;
    uint64_t seed = 0;
    std::string searcher;
    std::string backend;
    std::string started_at; // ISO 8601 UTC
    std::string out_dir;

    std::string to_json() const;
};

struct RunOverrides {
    std::optional<uint64_t> seed;
    std::optional<uint32_t> threads;
};

// Applies CLI/environment precedence: explicit override, then MPAE_SEED /
// MPAE_OUT, then the config file.
SearchConfig resolve_config(const std::filesystem::path& config_path,
                            const RunOverrides& overrides);
std::filesystem::path resolve_out_dir(const std::string& cli_out_dir);

// One convergence sample per generation (plus the post-warm-up baseline).
struct GenerationSample {
    uint32_t generation = 0;
    uint64_t eval_calls = 0;
    double best_error = 0.0;
    size_t front_size = 0;
    double hypervolume = 0.0;
};

struct RunOutput {
    RunState state;
    std::vector<GenerationSample> samples;
};

// Reference point for hypervolume: error 1.0, 1.1x the maximum possible
// size proxy of the geometry.
std::array<double, 2> hypervolume_reference(const SearchConfig& cfg);

// Executes a fully resolved config, writing manifest, event log, pareto
// CSV, checkpoints, final front exports and summary into out_dir.
RunOutput execute_run(const SearchConfig& cfg, const std::filesystem::path& out_dir);

// In-memory variant used by the comparison matrix and tests.
RunOutput execute_run_in_memory(const SearchConfig& cfg);

int cmd_search(const std::filesystem::path& config_path, const std::string& out_dir,
               const RunOverrides& overrides);

// Continue a checkpointed run to its configured generation count, writing
// the usual artifacts into a fresh output directory.
int cmd_resume(const std::filesystem::path& checkpoint_path, const std::string& out_dir);

struct OracleSpec {
    uint32_t layers = 3;
    uint32_t intermediate_nodes = 1;
    uint32_t num_ops = 2;
    uint64_t landscape_seed = 7;
    double interaction_alpha = 0.5;
    uint64_t cap = 0; // 0 = default cap
    std::string backend = "synthetic";
    std::string table_path; // backend == "tabular"
};

// Exhaustive enumeration: writes the full objective table and the true
// Pareto front, then self-checks the front for internal nondominance.
int cmd_oracle(const OracleSpec& spec, const std::string& out_dir);

int cmd_gen_table(const OracleSpec& spec, const std::string& out_path);

struct CompareSpec {
    std::vector<std::filesystem::path> config_paths;
    std::vector<uint64_t> seeds;
    std::optional<std::filesystem::path> oracle_table; // normalizes hypervolume
    uint32_t threads = 1; // parallel matrix cells; each run stays single threaded
};

int cmd_compare(const CompareSpec& spec, const std::string& out_dir);

// format: "archives", "front" or "checkpoint"; layer limits archive dumps.
int cmd_export(const std::filesystem::path& checkpoint_path, const std::string& format,
               const std::string& out_dir, std::optional<uint32_t> layer);

} // namespace mpae

#endif
