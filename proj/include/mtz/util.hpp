#ifndef MTZ_UTIL_HPP
#define MTZ_UTIL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace mtz {

// Runs f(i) for i in [0, n) across hardware threads; results must be written
// to index-addressed slots so ordering stays deterministic.
template <typename F>
void parallel_for(size_t n, F&& f) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(std::min<size_t>(hw, n));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace mtz

#endif
