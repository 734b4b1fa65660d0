#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pollyanna
{
    /// Runs fn(0) .. fn(count-1) on up to `jobs` threads. Results must be
    /// written to per-index slots so callers assemble them in index order.
    /// The exception from the lowest failing index is rethrown.
    template <typename Fn>
    auto parallel_for(std::size_t count, unsigned jobs, Fn && fn) -> void
    {
        if (jobs <= 1 || count <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(count);
        {
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w)
                workers.emplace_back([&] {
                    for (auto i = next++; i < count; i = next++) {
                        try {
                            fn(i);
                        }
                        catch (...) {
                            errors[i] = std::current_exception();
                        }
                    }
                });
        }
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);
    }
}
