#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace walkhull {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(trial) for trial in [0, trials) over contiguous blocks, one block
/// per worker. Workers must write only to per-trial slots, which keeps results
/// independent of scheduling and thread count.
template <typename Fn>
void parallel_trials(std::int64_t trials, int threads, Fn&& fn) {
    threads = static_cast<int>(std::min<std::int64_t>(resolve_threads(threads), trials));
    if (threads <= 1) {
        for (std::int64_t t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (trials + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min<std::int64_t>(trials, lo + chunk);
        workers.emplace_back([&, w, lo, hi] {
            try {
                for (std::int64_t t = lo; t < hi; ++t) fn(t);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace walkhull
