#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wgreedy {

/// Process-wide worker count used when a caller passes 0. Results never depend on it.
void set_default_workers(unsigned workers);
unsigned default_workers();

/// Runs body(begin, end) over consecutive chunks of [0, total) on up to
/// `workers` threads (0 = default). The first exception is rethrown.
template <class Body>
void parallel_chunks(std::uint64_t total, unsigned workers, Body&& body) {
    if (total == 0) return;
    if (workers == 0) workers = default_workers();
    const std::uint64_t chunks = std::min<std::uint64_t>(total, std::max(1u, workers) * 4ULL);
    if (workers <= 1 || chunks == 1) {
        body(std::uint64_t{0}, total);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            const std::uint64_t begin = total * c / chunks;
            const std::uint64_t end = total * (c + 1) / chunks;
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < std::min<std::uint64_t>(workers, chunks); ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace wgreedy
