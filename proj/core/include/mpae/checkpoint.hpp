#ifndef MPAE_CHECKPOINT_HPP
#define MPAE_CHECKPOINT_HPP

#include "mpae/engine.hpp"

#include <filesystem>
#include <string>

namespace mpae {

// Versioned, resumable snapshot of a RunState ("mpae-checkpoint" v1, JSON).
// Round trip preserves state_hash().
std::string serialize_checkpoint(const RunState& state);
RunState parse_checkpoint(const std::string& text);

void write_checkpoint(const std::filesystem::path& path, const RunState& state);
RunState load_checkpoint(const std::filesystem::path& path);

} // namespace mpae

#endif
