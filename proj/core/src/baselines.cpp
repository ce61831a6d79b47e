#include "mpae/baselines.hpp"

namespace mpae {

RunState run_mpae(SearchConfig cfg, const std::function<void(Engine&)>& on_generation) {
    cfg.searcher = SearcherKind::Mpae;
    return run_search(cfg, on_generation);
}

RunState run_coevolution(SearchConfig cfg, const std::function<void(Engine&)>& on_generation) {
    cfg.searcher = SearcherKind::Coevolution;
    return run_search(cfg, on_generation);
}

RunState run_global_search(SearchConfig cfg, const std::function<void(Engine&)>& on_generation) {
    cfg.searcher = SearcherKind::Global;
    return run_search(cfg, on_generation);
}

} // namespace mpae
