#ifndef MPAE_CONFIG_HPP
#define MPAE_CONFIG_HPP

#include "mpae/cell.hpp"
#include "mpae/evaluate.hpp"
#include "mpae/migration.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace mpae {

enum class SearcherKind { Mpae, Coevolution, Global };

const char* searcher_name(SearcherKind k);
SearcherKind searcher_from_name(const std::string& name);

struct SurrogateParams {
    double eta = 0.1;
    double max_maturity = 1.0;
    double lambda = 0.5;
    bool operator==(const SurrogateParams&) const = default;
};

struct LandscapeParams {
    uint64_t seed = 7;
    double interaction_alpha = 0.5;
    bool operator==(const LandscapeParams&) const = default;
};

// Run configuration. Defaults outside the geometry follow the reference
// schedule: 20 layers, population 64, crossover and mutation rates 0.25,
// architectures updated every 10 training epochs, warm-up one tenth of the
// total epoch budget.
struct SearchConfig {
    SearcherKind searcher = SearcherKind::Mpae;
    BackendKind backend = BackendKind::Synthetic;
    BackendKind surrogate_base = BackendKind::Synthetic;
    std::string table_path;

    uint32_t layers = 20;
    uint32_t population_size = 64;
    uint32_t generations = 45;
    int64_t warmup_steps = -1; // negative: derive effective_warmup()
    uint32_t epochs_per_arch_update = 10;
    double crossover_rate = 0.25;
    double mutation_rate = 0.25;

    uint32_t intermediate_nodes = 4;
    uint32_t num_ops = 8;

    uint32_t archive_size = 8;
    MigrationPolicy migration;

    uint64_t max_evaluations = 0; // 0 = unbounded
    uint64_t seed = 1;
    uint32_t threads = 1;
    uint32_t checkpoint_every = 0; // generations between checkpoints; 0 = final only

    SurrogateParams surrogate;
    LandscapeParams landscape;

    CellShape shape() const;
    // Warm-up steps actually run: the explicit value, or one ninth of the
    // search-phase training epochs so warm-up is 10% of the grand total.
    uint32_t effective_warmup() const;
    void validate() const;

    bool operator==(const SearchConfig&) const = default;
};

SearchConfig config_from_json_text(const std::string& text);
// Canonical serialization (sorted keys, stable number formatting).
std::string config_to_json_text(const SearchConfig& cfg);

SearchConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const SearchConfig& cfg);

} // namespace mpae

#endif
