#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace rrcensus {

// Resolve a thread-count request: 0 means "use the hardware concurrency".
inline unsigned resolve_threads(unsigned requested) noexcept
{
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Fork-join over the index range [0, jobs): the range is split into
// contiguous chunks, fn(chunk, begin, end) runs once per chunk, and the
// caller combines per-chunk results in chunk order.  With the combination
// order fixed the result is independent of the thread width.
template <class Fn>
void run_chunked(std::size_t jobs, unsigned threads, std::size_t num_chunks, Fn&& fn)
{
    if (jobs == 0)
        return;
    if (num_chunks > jobs)
        num_chunks = jobs;
    threads = resolve_threads(threads);

    auto chunk_bounds = [&](std::size_t chunk) {
        const std::size_t lo = jobs * chunk / num_chunks;
        const std::size_t hi = jobs * (chunk + 1) / num_chunks;
        return std::pair{lo, hi};
    };

    if (threads <= 1 || num_chunks <= 1) {
        for (std::size_t c = 0; c < num_chunks; ++c) {
            auto [lo, hi] = chunk_bounds(c);
            fn(c, lo, hi);
        }
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t c = t; c < num_chunks; c += threads) {
                auto [lo, hi] = chunk_bounds(c);
                fn(c, lo, hi);
            }
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace rrcensus
