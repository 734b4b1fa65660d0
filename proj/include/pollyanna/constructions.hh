#pragma once

#include <pollyanna/budget.hh>
#include <pollyanna/graph.hh>
#include <pollyanna/provider.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pollyanna
{
    /// Index layout of M(G) for a base graph on n vertices: original vertices
    /// keep 0..n-1, their shadows are n..2n-1, and the apex is 2n.
    struct MycielskiLayout
    {
        std::size_t base_order = 0;

        auto original(Vertex i) const -> Vertex { return i; }
        auto shadow(Vertex i) const -> Vertex { return static_cast<Vertex>(base_order + i); }
        auto apex() const -> Vertex { return static_cast<Vertex>(2 * base_order); }
        auto order() const -> std::size_t { return 2 * base_order + 1; }
    };

    struct Mycielskian
    {
        Graph graph;
        MycielskiLayout layout;
    };

    auto mycielskian(const Graph & g) -> Mycielskian;

    /// Largest tower level this build will materialise.
    inline constexpr long max_tower_level = 13;

    struct Tower
    {
        Graph graph;
        long claimed_chi = 0;
        long claimed_omega = 2;
    };

    /// 3 * 2^(r-2) - 1. Throws InvalidParameter if r < 2.
    auto tower_order(long r) -> std::size_t;

    /// T_2 = K_2, T_{r+1} = M(T_r). Throws InvalidParameter if r < 2 and
    /// TooLarge above max_tower_level.
    auto mycielski_tower(long r) -> Tower;

    /// Core graphs with clique number 2: G_{2,m} = T_{max(m,2)}.
    auto provider_r2(long m) -> Graph;

    /// C(3n+1, 3) for 2 <= n < r, 1 at n = 1, and nullopt (unbounded) for n >= r.
    auto bounding_target(long r, long n) -> std::optional<std::int64_t>;

    /// B_r: the chromatic bound for core subgraphs of clique number below r,
    /// max of bounding_target(r, i) over 1 <= i <= r-1.
    auto core_bound(long r) -> std::int64_t;

    /// W_r = max(B_r, r): the bound on chi^(r-1) over induced subgraphs of blocks.
    auto goodness_bound(long r) -> std::int64_t;

    struct BlockSpec
    {
        long r = 2;
        long m = 1;
        ProviderRef provider;
        std::int64_t core_bound = 1;
        std::int64_t goodness_bound = 2;
        long claimed_chi_lb = 1;
        long claimed_omega = 2;
    };

    /// Throws InvalidParameter unless r >= 2 and m >= 1.
    auto make_block_spec(long r, long m, ProviderRef provider = {}) -> BlockSpec;

    /// The block X_{r,m}: core graph first, tower T_r as the trailing indices.
    struct TaggedGraph
    {
        Graph graph;
        VertexSet core;
        VertexSet tag;
        BlockSpec spec;
        std::optional<long> core_chi_claim; // by construction or from a sidecar
        std::string core_source;
    };

    auto build_block(const BlockSpec & spec, const Budget & budget = {}) -> TaggedGraph;

    /// Disjoint union of an already-built core with T_r.
    auto assemble_block(const BlockSpec & spec, const Graph & core, std::optional<long> core_chi_claim, std::string core_source) -> TaggedGraph;

    /// A finite slice of the class: ranges of m for each r, plus the files
    /// backing r >= 3.
    struct ClassSpec
    {
        struct Range
        {
            long r = 2;
            long m_min = 1;
            long m_max = 1;
        };

        std::vector<Range> ranges;
        ProviderRegistry providers;
    };

    /// Throws InvalidParameter on r < 2, m < 1 or an empty range.
    auto validate(const ClassSpec & spec) -> void;
}
