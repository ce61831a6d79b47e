#include "mpae/individual.hpp"

#include "mpae/errors.hpp"

namespace mpae {

const char* origin_name(Origin o) {
    switch (o) {
    case Origin::Initial: return "initial";
    case Origin::Offspring: return "offspring";
    case Origin::Migrant: return "migrant";
    case Origin::ParentCarryover: return "parent-carryover";
    }
    throw ArgumentError("unknown origin");
}

Origin origin_from_name(const std::string& name) {
    if (name == "initial") return Origin::Initial;
    if (name == "offspring") return Origin::Offspring;
    if (name == "migrant") return Origin::Migrant;
    if (name == "parent-carryover") return Origin::ParentCarryover;
    throw FormatError("unknown origin name: '" + name + "'");
}

const ObjectiveVector& Individual::objs() const {
    if (!objectives) {
        throw UnevaluatedIndividualError("individual " + std::to_string(id) +
                                         " has no objectives");
    }
    return *objectives;
}

} // namespace mpae
