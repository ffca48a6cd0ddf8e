#ifndef TENSORBODY_PARALLEL_HPP
#define TENSORBODY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tb {

/** Worker-thread cap: TENSORBODY_THREADS when set, hardware concurrency otherwise. */
inline int worker_threads() {
    if (const char* env = std::getenv("TENSORBODY_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/**
 * Runs fn(i) for i in [0, count) on up to worker_threads() threads.  The
 * caller owns any result slots, so reductions stay deterministic regardless
 * of thread count.  fn must be safe to call concurrently.
 */
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    const int threads = std::min(worker_threads(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace tb

#endif
