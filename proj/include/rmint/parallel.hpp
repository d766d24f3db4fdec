#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace rmint {

/// Chunked deterministic parallel loop. The index range [0, total) is split
/// into fixed chunks handed out by an atomic counter; `fn(chunk_index, begin,
/// end)` must write results keyed by chunk_index (or by absolute index) so the
/// merge is schedule independent. With threads <= 1 runs inline.
template <class Fn>
void parallel_chunks(std::uint64_t total, unsigned threads, std::uint64_t chunk_size, Fn&& fn) {
    if (total == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
    if (threads <= 1 || nchunks == 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<std::uint64_t>(threads, nchunks);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

/// First-hit support for witness searches: chunks abort once an
/// earlier-indexed chunk has already found a witness, so the surviving hit is
/// the lexicographically least one regardless of scheduling.
struct FirstHit {
    std::atomic<std::uint64_t> best_chunk{UINT64_MAX};
    bool should_abort(std::uint64_t chunk) const { return best_chunk.load(std::memory_order_relaxed) < chunk; }
    void found(std::uint64_t chunk) {
        std::uint64_t cur = best_chunk.load();
        while (chunk < cur && !best_chunk.compare_exchange_weak(cur, chunk)) {}
    }
};

} // namespace rmint
