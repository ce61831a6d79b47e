#include "mpae/ops.hpp"

#include "mpae/errors.hpp"
#include "mpae/util.hpp"

namespace mpae {

OpVocabulary OpVocabulary::default_for(size_t k) {
    static const std::vector<std::string> kDartsLabels = {
        "none",          "max_pool_3x3", "avg_pool_3x3", "skip_connect",
        "sep_conv_3x3",  "sep_conv_5x5", "dil_conv_3x3", "dil_conv_5x5",
    };
    static const std::vector<double> kDartsCosts = {0.0, 0.1, 0.1, 0.05,
                                                    1.0, 1.5, 0.8, 1.2};
    OpVocabulary v;
    v.labels.reserve(k);
    v.costs.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        if (i < kDartsLabels.size()) {
            v.labels.push_back(kDartsLabels[i]);
            v.costs.push_back(kDartsCosts[i]);
        } else {
            v.labels.push_back("op" + std::to_string(i));
            v.costs.push_back(0.1 * static_cast<double>(i));
        }
    }
    return v;
}

void OpVocabulary::validate() const {
    if (labels.size() != costs.size()) {
        throw ArgumentError("OpVocabulary: labels/costs size mismatch");
    }
    if (labels.size() < 2) throw ArgumentError("OpVocabulary: need at least 2 ops");
    for (double c : costs) {
        if (!(c >= 0.0)) throw ArgumentError("OpVocabulary: costs must be >= 0");
    }
    for (const auto& l : labels) {
        if (l.empty() || l.find(',') != std::string::npos || l.find(' ') != std::string::npos) {
            throw ArgumentError("OpVocabulary: label must be nonempty, no commas/spaces: '" + l + "'");
        }
    }
}

} // namespace mpae
