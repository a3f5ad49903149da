#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclemod {

/// Runs fn(i) for every i in [0, count), fanning the indices out over up to
/// `jobs` worker threads. jobs <= 1 runs inline. The first exception thrown
/// by fn is rethrown on the calling thread once all workers have stopped.
template <typename Fn>
void parallel_for_index(std::int64_t count, int jobs, Fn&& fn) {
    if (count <= 0)
        return;
    if (jobs <= 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    const auto workers = static_cast<std::size_t>(std::min<std::int64_t>(jobs, count));
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& worker : pool)
        worker.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace cyclemod
