// Drives the installed binary end to end through std::system, covering the
// exit codes and byte-for-byte rerun stability the CLI promises.
#include "mpae/config.hpp"
#include "mpae/util.hpp"

#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

const char* cli_path() {
#ifdef MPAE_CLI_PATH
    return MPAE_CLI_PATH;
#else
    return "mpae";
#endif
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("/tmp/mpae_cli_tests") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_tiny_config(const fs::path& dir) {
    mpae::SearchConfig cfg;
    cfg.layers = 3;
    cfg.population_size = 8;
    cfg.generations = 5;
    cfg.warmup_steps = 2;
    cfg.epochs_per_arch_update = 2;
    cfg.intermediate_nodes = 1;
    cfg.num_ops = 2;
    cfg.archive_size = 4;
    cfg.migration.base_count = 2;
    cfg.migration.similarity_depth = 2;
    cfg.migration.max_total = 4;
    cfg.seed = 31;
    const fs::path path = dir / "tiny.json";
    mpae::save_config(path, cfg);
    return path;
}

} // namespace

TEST_CASE("search: tiny config completes quickly with byte-identical reruns") {
    const fs::path dir = fresh_dir("search");
    const fs::path cfg = write_tiny_config(dir);

    const auto t0 = std::chrono::steady_clock::now();
    CHECK(run_cli("search --config " + cfg.string() + " --out " + (dir / "a").string()) == 0);
    const auto elapsed = std::chrono::steady_clock::now() - t0;
    CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 10);

    CHECK(run_cli("search --config " + cfg.string() + " --out " + (dir / "b").string()) == 0);
    CHECK(mpae::read_file(dir / "a" / "events.log") == mpae::read_file(dir / "b" / "events.log"));
    CHECK(mpae::read_file(dir / "a" / "pareto.csv") == mpae::read_file(dir / "b" / "pareto.csv"));
}

TEST_CASE("search: missing config file exits with the config error code") {
    const fs::path dir = fresh_dir("badcfg");
    CHECK(run_cli("search --config " + (dir / "absent.json").string() + " --out " +
                  (dir / "out").string()) == 2);
}

TEST_CASE("oracle and gen-table agree on the emitted table") {
    const fs::path dir = fresh_dir("oracle");
    CHECK(run_cli("oracle --layers 3 --nodes 1 --ops 2 --out " + (dir / "o").string()) == 0);
    CHECK(run_cli("gen-table --layers 3 --nodes 1 --ops 2 --out " +
                  (dir / "table.txt").string()) == 0);
    CHECK(mpae::read_file(dir / "o" / "table.txt") == mpae::read_file(dir / "table.txt"));
    CHECK(run_cli("oracle --layers 20 --nodes 4 --ops 8 --out " + (dir / "big").string()) == 6);
}

TEST_CASE("export consumes search checkpoints") {
    const fs::path dir = fresh_dir("export");
    const fs::path cfg = write_tiny_config(dir);
    REQUIRE(run_cli("search --config " + cfg.string() + " --out " + (dir / "run").string()) == 0);
    CHECK(run_cli("export --checkpoint " + (dir / "run" / "checkpoint_final.json").string() +
                  " --format archives --out " + (dir / "dump").string()) == 0);
    CHECK(fs::exists(dir / "dump" / "archive_layer0.txt"));
    CHECK(run_cli("export --checkpoint " + cfg.string() + " --format archives --out " +
                  (dir / "dump2").string()) == 4); // a config is not a checkpoint
}

TEST_CASE("compare runs a matrix from the command line") {
    const fs::path dir = fresh_dir("compare");
    const fs::path cfg = write_tiny_config(dir);

    mpae::SearchConfig coevo = mpae::load_config(cfg);
    coevo.searcher = mpae::SearcherKind::Coevolution;
    const fs::path coevo_path = dir / "coevo.json";
    mpae::save_config(coevo_path, coevo);

    CHECK(run_cli("compare --config " + cfg.string() + " " + coevo_path.string() +
                  " --seeds 1 2 --threads 2 --out " + (dir / "out").string()) == 0);
    CHECK(fs::exists(dir / "out" / "convergence.csv"));
    CHECK(fs::exists(dir / "out" / "mannwhitney.csv"));
    CHECK(fs::exists(dir / "out" / "origin_summary.csv"));
}
