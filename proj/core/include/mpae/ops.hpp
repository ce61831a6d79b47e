#ifndef MPAE_OPS_HPP
#define MPAE_OPS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mpae {

// Ordered operation vocabulary. Labels are opaque to the search; the cost
// weight feeds the size objective.
struct OpVocabulary {
    std::vector<std::string> labels;
    std::vector<double> costs;

    size_t size() const { return labels.size(); }

    // First k entries of the DARTS cell vocabulary for k <= 8, generic
    // labels beyond that.
    static OpVocabulary default_for(size_t k);

    void validate() const;
};

} // namespace mpae

#endif
