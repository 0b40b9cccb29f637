#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace kinetic {

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Splits [0,n) into contiguous chunks, one worker thread per chunk.
// fn(begin, end) must only write to index-addressed slots, so the result is
// identical for any thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                         unsigned threads = 0) {
    if (threads == 0) threads = default_threads();
    if (n == 0) return;
    if (threads <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t b = static_cast<std::size_t>(w) * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, b, e);
    }
    for (auto& t : pool) t.join();
}

}  // namespace kinetic
