#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace zetalab {

// Thread count resolution: explicit request wins, 0 defers to ZETALAB_THREADS,
// anything unusable collapses to 1. Capped so a typo cannot fork-bomb.
inline int resolve_threads(int requested) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("ZETALAB_THREADS")) {
            n = std::atoi(env);
        }
    }
    if (n <= 0) n = 1;
    if (n > 64) n = 64;
    return n;
}

// Index-sliced parallel loop. body(i) must write only to slot i of
// caller-owned storage; reductions happen serially afterwards in index order,
// which keeps results byte-identical for any thread count. The lowest-index
// exception is rethrown so failures are deterministic too.
template <typename Body>
void parallel_for(std::int64_t n, int threads, Body&& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    if (threads > n) threads = static_cast<int>(n);

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::int64_t> error_index(static_cast<std::size_t>(threads), -1);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            const std::int64_t lo = n * w / threads;
            const std::int64_t hi = n * (w + 1) / threads;
            for (std::int64_t i = lo; i < hi; ++i) {
                try {
                    body(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                    error_index[static_cast<std::size_t>(w)] = i;
                    break;
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    std::int64_t first = -1;
    int who = -1;
    for (int w = 0; w < threads; ++w) {
        if (errors[static_cast<std::size_t>(w)] &&
            (first < 0 || error_index[static_cast<std::size_t>(w)] < first)) {
            first = error_index[static_cast<std::size_t>(w)];
            who = w;
        }
    }
    if (who >= 0) std::rethrow_exception(errors[static_cast<std::size_t>(who)]);
}

}  // namespace zetalab
