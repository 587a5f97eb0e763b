#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace orthodontia {

/// Applies fn to every item on up to `workers` threads; results keep item order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, int workers, Fn fn) -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    std::vector<R> results(items.size());
    const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, std::max<std::size_t>(items.size(), 1));
    if (threads == 1) {
        for (std::size_t k = 0; k < items.size(); ++k) results[k] = fn(items[k]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < items.size(); k = next++) {
                try {
                    results[k] = fn(items[k]);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace orthodontia
