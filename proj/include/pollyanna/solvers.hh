#pragma once

#include <pollyanna/budget.hh>
#include <pollyanna/certificate.hh>
#include <pollyanna/graph.hh>

#include <cstddef>
#include <optional>

namespace pollyanna
{
    struct CliqueResult
    {
        std::size_t value = 0; // a lower bound if stats.timed_out
        CliqueCert clique;
        SearchStats stats;
    };

    /// Exact maximum clique by bitset branch and bound, with greedy colouring
    /// bounds over a degree-sorted candidate order.
    auto clique_number(const Graph & g, const Budget & budget = {}) -> CliqueResult;

    struct ChromaticResult
    {
        std::size_t value = 0;       // an upper bound if stats.timed_out
        std::size_t lower_bound = 0; // equals value when exact
        Coloring coloring;           // always proper, with `value` colours
        SearchStats stats;

        auto exact() const -> bool { return ! stats.timed_out; }
    };

    /// Exact chromatic number: each component is solved by raising k from the
    /// clique bound until the k-colourability search succeeds.
    auto chromatic_number(const Graph & g, const Budget & budget = {}) -> ChromaticResult;

    enum class Colourability
    {
        colourable,
        not_colourable,
        unknown
    };

    struct KColorResult
    {
        Colourability status = Colourability::unknown;
        std::optional<Coloring> coloring; // set iff colourable
        SearchStats stats;
    };

    /// DSATUR backtracking with forward checking and colour-symmetry breaking.
    /// Throws InvalidParameter if k < 0.
    auto k_colorable(const Graph & g, long k, const Budget & budget = {}) -> KColorResult;

    /// Greedy DSATUR colouring (no backtracking); an upper bound on chi.
    auto dsatur_greedy(const Graph & g) -> Coloring;

    struct RestrictedChiResult
    {
        long n = 0;
        std::size_t value = 0;
        VertexSet witness;
        SearchStats stats;
    };

    /// chi^(n)(G): the largest chromatic number of an induced subgraph with
    /// clique number at most n. Such subgraphs are exactly the complements
    /// of transversals of the (n+1)-cliques, and deleting more vertices never
    /// raises chi, so only minimal transversals need to be searched.
    /// Throws InvalidParameter if n < 0.
    auto chi_restricted(const Graph & g, long n, const Budget & budget = {}) -> RestrictedChiResult;

    /// Every clique of exactly `size` vertices, in lexicographic order.
    auto cliques_of_size(const Graph & g, std::size_t size) -> std::vector<VertexSet>;

    inline constexpr std::size_t brute_force_limit = 12;

    /// Exhaustive oracles, independent of the search code above. Throw
    /// TooLarge above brute_force_limit vertices.
    auto brute_force_chi(const Graph & g) -> std::size_t;
    auto brute_force_omega(const Graph & g) -> std::size_t;
}
