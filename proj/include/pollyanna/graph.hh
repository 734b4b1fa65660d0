#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pollyanna
{
    using Vertex = std::uint32_t;

    /// Sorted, duplicate-free list of vertex indices.
    using VertexSet = std::vector<Vertex>;

    using Bitset = boost::dynamic_bitset<std::uint64_t>;

    struct Edge
    {
        Vertex u, v;

        auto operator<=>(const Edge &) const = default;
    };

    /// Finite simple undirected graph on vertices 0..order-1, stored as one
    /// adjacency bitset per vertex. Immutable once built.
    class Graph
    {
        public:
            Graph() = default;

            auto order() const noexcept -> std::size_t { return _rows.size(); }
            auto size() const noexcept -> std::size_t { return _edge_count; }

            auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }
            auto neighbours(Vertex v) const -> const Bitset & { return _rows[v]; }
            auto degree(Vertex v) const -> std::size_t { return _rows[v].count(); }

            /// Each undirected edge once with u < v, in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            friend auto operator==(const Graph &, const Graph &) -> bool = default;

            friend auto make_graph(std::size_t order, const std::vector<Edge> & edges) -> Graph;

        private:
            std::vector<Bitset> _rows;
            std::size_t _edge_count = 0;
    };

    /// Symmetrises and deduplicates. Throws IndexOutOfRange or SelfLoop.
    auto make_graph(std::size_t order, const std::vector<Edge> & edges) -> Graph;

    struct InducedSubgraph
    {
        Graph graph;
        VertexSet original; // new index -> old index
    };

    /// Re-indexes the selected vertices in ascending order of their original index.
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph;
    auto induced_subgraph(const Graph & g, const Bitset & s) -> InducedSubgraph;

    /// g occupies 0..|g|-1 and h occupies |g|..|g|+|h|-1.
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    /// Connected components, each sorted, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<VertexSet>;

    /// True iff g has exactly one component (the empty graph is not connected).
    auto is_connected(const Graph & g) -> bool;

    auto is_triangle_free(const Graph & g) -> bool;

    auto all_vertices(const Graph & g) -> VertexSet;
    auto to_bitset(std::size_t order, const VertexSet & s) -> Bitset;
    auto to_vertex_set(const Bitset & b) -> VertexSet;

    auto complete_graph(std::size_t n) -> Graph;
    auto cycle_graph(std::size_t n) -> Graph;
    auto path_graph(std::size_t n) -> Graph;
    auto edgeless_graph(std::size_t n) -> Graph;
}
