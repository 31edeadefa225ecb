#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace projmotif {

/// Runs body(begin, end) over a partition of [0, count) on `workers` threads.
/// Chunks are contiguous and the partition depends only on (count, workers),
/// so write-disjoint bodies give deterministic results. The first exception
/// thrown by any chunk is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::int64_t count, int workers, Body&& body) {
    if (count <= 0) {
        return;
    }
    if (workers > count) {
        workers = static_cast<int>(count);
    }
    if (workers <= 1) {
        body(static_cast<std::int64_t>(0), count);
        return;
    }

    const std::int64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr first_error;
    std::mutex error_mutex;

    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = static_cast<std::int64_t>(w) * chunk;
        const std::int64_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : threads) {
        th.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace projmotif
