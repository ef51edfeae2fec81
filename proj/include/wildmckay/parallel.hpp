#pragma once

// Minimal data-parallel loop used by the exhaustive scans, the conjugacy
// brute force, and the sweep driver.  The worker count is capped by the
// WILDMCKAY_THREADS environment variable (default: hardware concurrency).
// Work is split into fixed contiguous chunks so results that are merged in
// chunk order are deterministic regardless of the thread count.

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wmk {

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("WILDMCKAY_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v < 1024) hw = std::min<unsigned>(hw, unsigned(v));
    }
    return hw;
}

// Calls fn(i) for i in [0, n); fn must only touch index-i state.
template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned workers = worker_count();
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = unsigned(std::min<size_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = n * w / workers;
        size_t hi = n * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wmk
