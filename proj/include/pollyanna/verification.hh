#pragma once

#include <pollyanna/constructions.hh>
#include <pollyanna/polynomial.hh>
#include <pollyanna/report.hh>
#include <pollyanna/solvers.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pollyanna
{
    inline constexpr std::uint64_t default_seed = 20240601;

    struct VerifyOptions
    {
        double budget_seconds = 120.0; // per individual solve
        unsigned jobs = 1;
        std::uint64_t seed = default_seed;
        std::size_t sample_limit = 1000;
        std::size_t exhaustive_limit = 18;

        /// Towers above this level keep chi(T_r) = r as a construction claim
        /// rather than being re-solved.
        long max_exact_tower = 5;

        auto budget() const -> Budget { return Budget::seconds(budget_seconds); }
    };

    /// Builds M(G) and checks that it is triangle-free with chi(M(G)) = chi(G) + 1.
    /// Throws PreconditionFailed if G has a triangle or chi(G) < 2.
    auto check_mycielski_lemma(const Graph & g, const VerifyOptions & options = {}) -> CheckReport;

    /// Structural problems with a block: broken core/tag partition, edges
    /// across it, or a tag that is not T_r. Empty when well formed.
    auto validate_block(const TaggedGraph & x) -> std::vector<std::string>;

    /// omega(X) = r, chi(X) >= m, the tag is triangle-free with chi = r, X is
    /// disconnected and its tag connected.
    auto check_block_observation(const TaggedGraph & x, const VerifyOptions & options = {}) -> CheckReport;

    enum class SamplingStrategy
    {
        exhaustive,
        random
    };

    /// Induced subgraphs of one block, indexable so samples can be solved in
    /// parallel. Exhaustive plans enumerate every subset by bitmask; larger
    /// graphs, or a random request, get `limit` uniform subsets followed by
    /// every single-vertex deletion.
    class SamplePlan
    {
        public:
            SamplePlan(std::size_t order, SamplingStrategy requested, std::size_t limit, std::uint64_t seed, std::size_t exhaustive_limit = 18);

            auto size() const -> std::size_t;
            auto operator[](std::size_t i) const -> VertexSet;
            auto exhaustive() const -> bool { return _exhaustive; }
            auto describe() const -> std::string;

        private:
            std::size_t _order;
            bool _exhaustive;
            std::uint64_t _seed;
            std::vector<VertexSet> _random;
    };

    /// Throws InvalidParameter for a random plan with limit 0.
    auto hereditary_closure_sample(const TaggedGraph & x, SamplingStrategy strategy, std::size_t limit,
            std::uint64_t seed = default_seed, std::size_t exhaustive_limit = 18) -> std::vector<VertexSet>;

    struct GoodnessSample
    {
        std::string block;
        VertexSet vertices;
        std::size_t value = 0;
        bool timed_out = false;
    };

    struct GoodnessReport
    {
        long r = 2;
        std::int64_t bound = 0; // W_r
        std::vector<GoodnessSample> samples;
        std::size_t max_observed = 0;
        bool pass = false;
        std::string strategy;
        std::vector<std::string> malformed;
        CheckReport report;
    };

    /// Computes chi^(r-1) on sampled induced subgraphs of each block and
    /// compares the maximum with W_r.
    auto check_goodness(long r, std::span<const TaggedGraph> blocks, SamplingStrategy strategy, const VerifyOptions & options = {}) -> GoodnessReport;
    auto check_goodness(long r, long m_min, long m_max, const ProviderRegistry & providers, SamplingStrategy strategy,
            const VerifyOptions & options = {}) -> GoodnessReport;

    struct NonpolyWitness
    {
        BigInt m;
        BigInt p_of_r;
        std::optional<TaggedGraph> block; // absent when too large to materialise
        CheckReport report;
    };

    /// Picks m = p(r) + 1 and gathers evidence that chi(X_{r,m}) >= m > p(omega(X_{r,m})).
    auto find_nonpoly_witness(long r, const Polynomial & p, const ProviderRegistry & providers, const VerifyOptions & options = {}) -> NonpolyWitness;

    /// A tabulated bounding function phi(1..K). No monotonicity is assumed.
    struct BoundingTable
    {
        std::vector<std::int64_t> values;

        /// 1-based. Throws TableTooShort past the end.
        auto at(std::int64_t s) const -> std::int64_t;
    };

    struct PollyannaConstants
    {
        std::int64_t r_f = 0; // max(2, phi(2))
        std::int64_t m_f = 0; // max of phi(1..r_f)
    };

    /// Throws TableTooShort if phi(2) or phi(r_f) is missing, InvalidParameter
    /// on a non-positive entry.
    auto pollyanna_bound(const BoundingTable & table) -> PollyannaConstants;

    /// For each block: if its tag is compatible with the table (r <= phi(2))
    /// and every sampled induced subgraph Z satisfies chi(Z) <= phi(omega(Z)),
    /// the block must have chi <= M_F.
    auto check_pollyanna_implication(const BoundingTable & table, std::span<const TaggedGraph> blocks, const VerifyOptions & options = {}) -> CheckReport;

    struct ChiMaxResult
    {
        std::optional<std::size_t> value; // nullopt: no member has clique number n
        bool timed_out = false;
    };

    /// Largest chi over the members with clique number exactly n.
    auto chi_max_of_class(std::span<const Graph> graphs, long n, const VerifyOptions & options = {}) -> ChiMaxResult;

    struct VerifyAllConfig
    {
        ClassSpec slice;
        std::map<long, Polynomial> polynomials; // per r; p(x) = x when absent
        std::optional<BoundingTable> table;
    };

    /// Every block, goodness, witness and non-hereditary check for the slice,
    /// in declaration order. Provider failures become error entries without
    /// stopping the remaining checks.
    auto verify_all(const VerifyAllConfig & config, const VerifyOptions & options = {}) -> Summary;
}
