#ifndef MPAE_TABLE_HPP
#define MPAE_TABLE_HPP

#include "mpae/evaluate.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace mpae {

// Line-oriented table file, format "mpae-table v1":
//
//   mpae-table v1
//   layers: 3
//   intermediate_nodes: 1
//   ops: none,max_pool_3x3
//   op_costs: 0,0.1
//   objectives: 2
//   records: 64
//   <hexkey> <obj0> <obj1>
//   ...
std::string serialize_table(const TabularBenchmark& table);
TabularBenchmark parse_table(const std::string& text);

void write_table(const std::filesystem::path& path, const TabularBenchmark& table);
TabularBenchmark load_table(const std::filesystem::path& path);

// Complete table over every valid architecture of the given geometry,
// evaluated on the synthetic landscape. Enumeration is odometer order over
// per-layer valid cells; throws CapExceededError when the space exceeds
// `cap` (0 = default cap of 1e6 architectures).
TabularBenchmark generate_table(const CellShape& shape, uint32_t layers,
                                const OpVocabulary& vocab, uint64_t landscape_seed,
                                double interaction_alpha, uint64_t cap = 0);

// Total architecture count for the geometry (cells^layers) with overflow
// and cap checking.
uint64_t count_architectures(const CellShape& shape, uint32_t layers, uint64_t cap);

} // namespace mpae

#endif
