#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace pollyanna
{
    /// A wall-clock limit shared by the exact solvers. A default-constructed
    /// budget never expires.
    class Budget
    {
        public:
            Budget() = default;

            static auto seconds(double s) -> Budget
            {
                Budget b;
                b._deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(s));
                return b;
            }

            auto expired() const -> bool
            {
                return _deadline && std::chrono::steady_clock::now() >= *_deadline;
            }

            auto unlimited() const -> bool
            {
                return ! _deadline.has_value();
            }

        private:
            std::optional<std::chrono::steady_clock::time_point> _deadline;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        double elapsed_seconds = 0.0;
        bool timed_out = false;
    };

    /// Polls the budget every few thousand nodes so the clock is not read in
    /// the innermost loop.
    class SearchGuard
    {
        public:
            explicit SearchGuard(const Budget & budget, SearchStats & stats) :
                _budget(budget),
                _stats(stats)
            {
            }

            auto tick() -> bool
            {
                ++_stats.nodes;
                if (_stats.timed_out)
                    return false;
                if ((_stats.nodes & 0xfff) == 0 && _budget.expired())
                    _stats.timed_out = true;
                return ! _stats.timed_out;
            }

            auto aborted() const -> bool
            {
                return _stats.timed_out;
            }

        private:
            const Budget & _budget;
            SearchStats & _stats;
    };
}
