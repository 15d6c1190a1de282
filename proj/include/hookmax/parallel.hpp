#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace hookmax {

inline int default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/* Runs fn(i) for i in [0, count) across the given number of threads.
 * Work items are claimed from a shared counter; fn must confine its side
 * effects to per-index slots so results combine deterministically after
 * the join. fn must not throw. */
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    if (threads > count) threads = count;
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i; (i = next.fetch_add(1, std::memory_order_relaxed)) < count;)
            fn(i);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

} // namespace hookmax
