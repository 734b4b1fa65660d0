#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pollyanna::cli
{
    /// Exit codes.
    inline constexpr int success = 0;
    inline constexpr int violated = 1;
    inline constexpr int usage_error = 2;
    inline constexpr int inconclusive = 3;

    /// Name of the environment variable overriding the default per-solve budget.
    inline constexpr const char * budget_variable = "POLLYANNA_BUDGET";

    /// `args` excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
