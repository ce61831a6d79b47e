#include "mpae/config.hpp"
#include "mpae/errors.hpp"

#include <doctest.h>

using namespace mpae;

TEST_CASE("defaults follow the reference schedule") {
    SearchConfig cfg;
    CHECK(cfg.layers == 20);
    CHECK(cfg.population_size == 64);
    CHECK(cfg.crossover_rate == 0.25);
    CHECK(cfg.mutation_rate == 0.25);
    CHECK(cfg.epochs_per_arch_update == 10);
    CHECK(cfg.intermediate_nodes == 4);
    CHECK(cfg.num_ops == 8);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("warm-up defaults to one tenth of the total epoch budget") {
    SearchConfig cfg;
    cfg.layers = 3;
    cfg.generations = 15;
    cfg.epochs_per_arch_update = 10;
    cfg.archive_size = 8;
    // search epochs = 15*3*10 = 450; warm-up 50 makes it 10% of 500.
    CHECK(cfg.effective_warmup() == 50);
    cfg.warmup_steps = 7;
    CHECK(cfg.effective_warmup() == 7);
    cfg.warmup_steps = 0;
    CHECK(cfg.effective_warmup() == 0);
}

TEST_CASE("config JSON round trips canonically") {
    SearchConfig cfg;
    cfg.layers = 5;
    cfg.population_size = 12;
    cfg.generations = 9;
    cfg.archive_size = 6;
    cfg.migration.base_count = 3;
    cfg.migration.similarity_depth = 2;
    cfg.migration.max_total = 7;
    cfg.backend = BackendKind::Surrogate;
    cfg.surrogate_base = BackendKind::Synthetic;
    cfg.seed = 99;
    const std::string text = config_to_json_text(cfg);
    const SearchConfig back = config_from_json_text(text);
    CHECK(back == cfg);
    CHECK(config_to_json_text(back) == text);
}

TEST_CASE("config parser rejects unknown keys, bad values and versions") {
    CHECK_THROWS_AS(config_from_json_text("not json"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text("[1,2]"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"no_such_key": 1})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"format_version": 9})"), VersionMismatchError);
    CHECK_THROWS_AS(config_from_json_text(R"({"layers": "twenty"})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"searcher": "annealing"})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"crossover_rate": 1.5})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"backend": "tabular"})"), ConfigError); // no table
    // Missing keys fall back to defaults.
    const SearchConfig cfg = config_from_json_text(R"({"layers": 4})");
    CHECK(cfg.layers == 4);
    CHECK(cfg.population_size == 64);
}

TEST_CASE("validation cross-checks relations between fields") {
    SearchConfig cfg;
    cfg.archive_size = 100; // > population_size
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    SearchConfig d;
    d.migration.similarity_depth = 9; // > archive_size 8
    CHECK_THROWS_AS(d.validate(), ConfigError);

    SearchConfig eta;
    eta.surrogate.eta = 2.0; // > max maturity
    CHECK_THROWS_AS(eta.validate(), ConfigError);

    SearchConfig alpha;
    alpha.landscape.interaction_alpha = 1.5;
    CHECK_THROWS_AS(alpha.validate(), ConfigError);
}
