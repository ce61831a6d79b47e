#ifndef MPAE_PARALLEL_HPP
#define MPAE_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace mpae {

// Run fn(i) for i in [0, n) over up to `threads` workers. Work is split
// into static contiguous chunks; results must be written by index so the
// outcome is independent of thread count. The lowest-index exception wins.
template <typename F>
void parallel_for(size_t n, uint32_t threads, F&& fn) {
    if (n == 0) return;
    const uint32_t workers =
        std::max<uint32_t>(1, std::min<uint32_t>(threads, static_cast<uint32_t>(n)));
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint32_t w = 0; w < workers; ++w) {
        const size_t begin = n * w / workers;
        const size_t end = n * (w + 1) / workers;
        pool.emplace_back([&, begin, end]() {
            for (size_t i = begin; i < end; ++i) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace mpae

#endif
