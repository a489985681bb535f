#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace parastat::util {

/// Worker count: hardware concurrency capped by PARASTAT_THREADS (>= 1).
inline int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("PARASTAT_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1 && cap < hw) hw = static_cast<int>(cap);
    }
    return hw;
}

/// Runs fn(0..n-1); iterations must write only to their own slots. Falls back
/// to a plain loop for small n or a single worker.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = thread_count();
    if (workers <= 1 || n < 32) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace parastat::util
