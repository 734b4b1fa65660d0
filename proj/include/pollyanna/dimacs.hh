#pragma once

#include <pollyanna/graph.hh>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pollyanna
{
    /// Reads the DIMACS .col format: `p edge <n> <m>`, `e <u> <v>` with
    /// 1-based endpoints, `c` comment lines. Duplicate edges (including both
    /// orientations) are merged. Throws ParseError.
    auto read_dimacs(std::istream & in) -> Graph;
    auto read_dimacs_file(const std::filesystem::path & path) -> Graph;

    /// Writes each edge once with u < v, sorted lexicographically.
    auto write_dimacs(std::ostream & out, const Graph & g, const std::vector<std::string> & comments = {}) -> void;
    auto write_dimacs_file(const std::filesystem::path & path, const Graph & g, const std::vector<std::string> & comments = {}) -> void;
}
