#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace threegap {

inline unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Applies fn to every input on up to `jobs` threads and returns the results
/// in input order. Work is handed out through a shared counter, but results
/// land at their input's index, so the output is independent of scheduling.
/// The first exception (by input index) is rethrown after all threads join.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& inputs, unsigned jobs, F&& fn)
    -> std::vector<decltype(fn(inputs[std::size_t{0}]))> {
    using Out = decltype(fn(inputs[std::size_t{0}]));
    std::vector<Out> results(inputs.size());
    if (inputs.empty()) {
        return results;
    }
    if (jobs <= 1 || inputs.size() == 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            results[i] = fn(inputs[i]);
        }
        return results;
    }
    std::vector<std::exception_ptr> errors(inputs.size());
    std::atomic<std::size_t> cursor{0};
    const std::size_t workers =
        jobs < inputs.size() ? jobs : static_cast<std::size_t>(inputs.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = cursor.fetch_add(1)) < inputs.size();) {
                try {
                    results[i] = fn(inputs[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

}  // namespace threegap
