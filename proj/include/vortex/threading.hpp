#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace vortex {

/// Worker cap: VORTEX_CHORUS_THREADS if set, else the hardware count.
inline unsigned worker_count() {
    if (const char* env = std::getenv("VORTEX_CHORUS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, count); results must be written to per-index slots
/// by the caller so aggregation stays order-deterministic.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace vortex
