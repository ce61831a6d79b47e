#ifndef MPAE_INDIVIDUAL_HPP
#define MPAE_INDIVIDUAL_HPP

#include "mpae/cell.hpp"
#include "mpae/objectives.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace mpae {

// How an individual entered its generation's selection pool. Set at
// construction and never changed; survivors re-enter the next pool as
// fresh parent-carryover records.
enum class Origin : uint8_t {
    Initial,
    Offspring,
    Migrant,
    ParentCarryover,
};

const char* origin_name(Origin o);
Origin origin_from_name(const std::string& name);

struct Individual {
    uint64_t id = 0;
    Genome genome;
    std::optional<ObjectiveVector> objectives;
    Origin origin = Origin::Initial;
    uint32_t birth_generation = 0;

    bool evaluated() const { return objectives.has_value(); }
    const ObjectiveVector& objs() const;
};

} // namespace mpae

#endif
