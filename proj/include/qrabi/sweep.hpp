#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qrabi {

/// start, start+step, ... up to stop, inclusive within half a step.
std::vector<double> inclusive_range(double start, double stop, double step);

/// Evaluates fn(0..count-1) on up to `jobs` threads. Results come back in
/// index order; if any call throws, the exception of the lowest failing
/// index is rethrown after all workers finish.
template <class F>
auto parallel_map(std::size_t count, int jobs, F&& fn) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
    if (threads == 1 || count < 2) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::min(threads, count); ++t)
            pool.emplace_back(worker);
    }

    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace qrabi
