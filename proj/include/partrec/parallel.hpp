#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace partrec {

/// Runs fn(begin, end) over a partition of [0, n). Deterministic: each index
/// is owned by exactly one chunk, so results are identical to the serial run.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t grain = 4096) {
    const std::size_t hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n <= grain) {
        fn(std::size_t{0}, n);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(hw, (n + grain - 1) / grain);
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace partrec
