#ifndef MPAE_BASELINES_HPP
#define MPAE_BASELINES_HPP

#include "mpae/engine.hpp"

namespace mpae {

// Reference searchers for the ablation study. Both share the engine's
// operators, evaluators and per-generation evaluation budget with the
// mpae searcher; each strips exactly one mechanism.
//
//   coevolution: no migration, all layers update against the previous
//                generation's archives (simultaneous instead of sequential
//                alternation); the would-be migrant budget is spent on
//                extra offspring.
//   global:      a single population over whole-architecture genomes with
//                the same per-node genetic rates applied across all layer
//                segments.

RunState run_mpae(SearchConfig cfg, const std::function<void(Engine&)>& on_generation = nullptr);
RunState run_coevolution(SearchConfig cfg,
                         const std::function<void(Engine&)>& on_generation = nullptr);
RunState run_global_search(SearchConfig cfg,
                           const std::function<void(Engine&)>& on_generation = nullptr);

} // namespace mpae

#endif
