#pragma once

#include <pollyanna/graph.hh>

#include <cstddef>
#include <iosfwd>
#include <variant>
#include <vector>

namespace pollyanna
{
    /// assignment[v] is a colour in 1..colors_used.
    struct Coloring
    {
        std::size_t colors_used = 0;
        std::vector<std::size_t> assignment;

        auto operator==(const Coloring &) const -> bool = default;
    };

    struct CliqueCert
    {
        VertexSet vertices;

        auto operator==(const CliqueCert &) const -> bool = default;
    };

    /// Proper, total, and every colour in 1..colors_used appears.
    auto verify_coloring(const Graph & g, const Coloring & c) -> bool;

    /// Distinct, in range, and pairwise adjacent.
    auto verify_clique(const Graph & g, const VertexSet & s) -> bool;

    /// Relabels colours by order of first appearance along the vertex order.
    auto normalise(const Coloring & c) -> Coloring;

    using Certificate = std::variant<Coloring, CliqueCert>;

    // Text format, 0-based vertices:
    //   chi <k>     followed by one `color <v> <c>` line per vertex
    //   omega <k>   followed by one `member <v>` line per clique vertex
    auto write_certificate(std::ostream & out, const Coloring & c) -> void;
    auto write_certificate(std::ostream & out, const CliqueCert & c) -> void;

    /// Throws ParseError. The declared value must match the body.
    auto read_certificate(std::istream & in) -> Certificate;

    auto check_certificate(const Graph & g, const Certificate & c) -> bool;
}
