#pragma once

// Deterministic parallel map: work items are indexed, each thread fills
// preassigned slots, results are merged in index order, so the outcome is
// identical for any thread count.

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace gcoh {

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

template <class Result, class Fn>
std::vector<Result> parallel_map(size_t count, int threads, Fn&& fn) {
    std::vector<Result> out(count);
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nt = std::min<size_t>(threads, count);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

} // namespace gcoh
