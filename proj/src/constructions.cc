#include <pollyanna/constructions.hh>
#include <pollyanna/errors.hh>

#include <algorithm>

using std::int64_t;
using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace pollyanna
{
    auto mycielskian(const Graph & g) -> Mycielskian
    {
        MycielskiLayout layout{g.order()};
        vector<Edge> edges;
        edges.reserve(3 * g.size() + g.order());

        for (auto & [i, j] : g.edges()) {
            edges.push_back(Edge{layout.original(i), layout.original(j)});
            edges.push_back(Edge{layout.shadow(i), layout.original(j)});
            edges.push_back(Edge{layout.shadow(j), layout.original(i)});
        }
        for (Vertex i = 0; i < g.order(); ++i)
            edges.push_back(Edge{layout.apex(), layout.shadow(i)});

        return Mycielskian{make_graph(layout.order(), edges), layout};
    }

    auto tower_order(long r) -> size_t
    {
        if (r < 2)
            throw InvalidParameter("tower level must be at least 2, got " + to_string(r));
        return 3 * (size_t{1} << (r - 2)) - 1;
    }

    auto mycielski_tower(long r) -> Tower
    {
        if (r < 2)
            throw InvalidParameter("tower level must be at least 2, got " + to_string(r));
        if (r > max_tower_level)
            throw TooLarge("tower level " + to_string(r) + " exceeds the materialisation limit " + to_string(max_tower_level));

        Graph g = complete_graph(2);
        for (long level = 2; level < r; ++level)
            g = mycielskian(g).graph;
        return Tower{std::move(g), r, 2};
    }

    auto provider_r2(long m) -> Graph
    {
        if (m < 1)
            throw InvalidParameter("m must be at least 1, got " + to_string(m));
        return mycielski_tower(std::max(m, 2L)).graph;
    }

    auto bounding_target(long r, long n) -> optional<int64_t>
    {
        if (n < 1)
            throw InvalidParameter("n must be at least 1, got " + to_string(n));
        if (n >= r)
            return std::nullopt;
        if (n == 1)
            return 1;
        int64_t top = 3 * n + 1;
        return top * (top - 1) * (top - 2) / 6;
    }

    auto core_bound(long r) -> int64_t
    {
        if (r < 2)
            throw InvalidParameter("r must be at least 2, got " + to_string(r));
        int64_t result = 0;
        for (long i = 1; i <= r - 1; ++i)
            result = std::max(result, *bounding_target(r, i));
        return result;
    }

    auto goodness_bound(long r) -> int64_t
    {
        return std::max<int64_t>(core_bound(r), r);
    }

    auto make_block_spec(long r, long m, ProviderRef provider) -> BlockSpec
    {
        if (r < 2)
            throw InvalidParameter("r must be at least 2, got " + to_string(r));
        if (m < 1)
            throw InvalidParameter("m must be at least 1, got " + to_string(m));
        if (provider.kind == ProviderRef::Kind::mycielski_tower && r != 2)
            throw ProviderUnavailable("the tower family only provides cores with clique number 2, not " + to_string(r));

        BlockSpec spec;
        spec.r = r;
        spec.m = m;
        spec.provider = std::move(provider);
        spec.core_bound = core_bound(r);
        spec.goodness_bound = goodness_bound(r);
        spec.claimed_chi_lb = m;
        spec.claimed_omega = r;
        return spec;
    }

    auto assemble_block(const BlockSpec & spec, const Graph & core, optional<long> core_chi_claim, string core_source) -> TaggedGraph
    {
        auto tower = mycielski_tower(spec.r);
        TaggedGraph x;
        x.graph = disjoint_union(core, tower.graph);
        for (Vertex v = 0; v < x.graph.order(); ++v)
            (v < core.order() ? x.core : x.tag).push_back(v);
        x.spec = spec;
        x.core_chi_claim = core_chi_claim;
        x.core_source = std::move(core_source);
        return x;
    }

    auto build_block(const BlockSpec & spec, const Budget & budget) -> TaggedGraph
    {
        if (spec.provider.kind == ProviderRef::Kind::mycielski_tower) {
            if (spec.r != 2)
                throw ProviderUnavailable("the tower family only provides cores with clique number 2");
            auto level = std::max(spec.m, 2L);
            return assemble_block(spec, provider_r2(spec.m), level, "T_" + to_string(level));
        }

        auto loaded = load_provider_graph(spec.r, spec.m, spec.provider.file, budget);
        optional<long> claim;
        if (loaded.claims)
            claim = loaded.claims->claimed_chi_lb;
        return assemble_block(spec, loaded.graph, claim, loaded.source);
    }

    auto validate(const ClassSpec & spec) -> void
    {
        for (auto & range : spec.ranges) {
            if (range.r < 2)
                throw InvalidParameter("slice has r = " + to_string(range.r) + " < 2");
            if (range.m_min < 1 || range.m_max < range.m_min)
                throw InvalidParameter("slice has an invalid m range [" + to_string(range.m_min) + ", " + to_string(range.m_max) + "]");
        }
    }
}
