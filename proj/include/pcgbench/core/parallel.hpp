#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace pcgb {

/// Runs fn(i) for i in [0, n) on `workers` threads with a strided split.
/// Callers write results by index, so output never depends on `workers`.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
}

}  // namespace pcgb
