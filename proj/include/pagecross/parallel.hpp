#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pagecross {

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PAGE_CROSSING_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

// Static block partition; fn(begin, end) runs on [begin, end).
inline void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n < 2048) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t b = w * chunk;
        if (b >= n) break;
        const size_t e = std::min(n, b + chunk);
        pool.emplace_back(fn, b, e);
    }
    for (auto& t : pool) t.join();
}

} // namespace pagecross
