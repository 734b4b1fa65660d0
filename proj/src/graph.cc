#include <pollyanna/errors.hh>
#include <pollyanna/graph.hh>

#include <algorithm>
#include <string>

using std::size_t;
using std::to_string;
using std::vector;

namespace pollyanna
{
    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v = _rows[u].find_next(u); v != Bitset::npos; v = _rows[u].find_next(v))
                result.push_back(Edge{u, static_cast<Vertex>(v)});
        return result;
    }

    auto make_graph(size_t order, const vector<Edge> & edges) -> Graph
    {
        Graph g;
        g._rows.assign(order, Bitset(order));
        for (auto & [u, v] : edges) {
            if (u >= order || v >= order)
                throw IndexOutOfRange("edge (" + to_string(u) + ", " + to_string(v) + ") has an endpoint >= order " + to_string(order));
            if (u == v)
                throw SelfLoop("self-loop at vertex " + to_string(u));
            if (! g._rows[u].test(v)) {
                g._rows[u].set(v);
                g._rows[v].set(u);
                ++g._edge_count;
            }
        }
        return g;
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        VertexSet sorted = s;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (! sorted.empty() && sorted.back() >= g.order())
            throw IndexOutOfRange("vertex " + to_string(sorted.back()) + " is not in a graph of order " + to_string(g.order()));

        vector<Edge> edges;
        for (size_t i = 0; i < sorted.size(); ++i)
            for (size_t j = i + 1; j < sorted.size(); ++j)
                if (g.adjacent(sorted[i], sorted[j]))
                    edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(j)});

        return InducedSubgraph{make_graph(sorted.size(), edges), std::move(sorted)};
    }

    auto induced_subgraph(const Graph & g, const Bitset & s) -> InducedSubgraph
    {
        if (s.size() != g.order())
            throw IndexOutOfRange("vertex bitset of size " + to_string(s.size()) + " used with a graph of order " + to_string(g.order()));
        return induced_subgraph(g, to_vertex_set(s));
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        auto edges = g.edges();
        auto offset = static_cast<Vertex>(g.order());
        for (auto & [u, v] : h.edges())
            edges.push_back(Edge{u + offset, v + offset});
        return make_graph(g.order() + h.order(), edges);
    }

    auto components(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        Bitset unseen(g.order());
        unseen.set();
        for (auto start = unseen.find_first(); start != Bitset::npos; start = unseen.find_first()) {
            Bitset component(g.order()), frontier(g.order());
            frontier.set(start);
            while (frontier.any()) {
                component |= frontier;
                Bitset next(g.order());
                for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
                    next |= g.neighbours(v);
                frontier = next - component;
            }
            unseen -= component;
            result.push_back(to_vertex_set(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() == 1;
    }

    auto is_triangle_free(const Graph & g) -> bool
    {
        for (Vertex u = 0; u < g.order(); ++u)
            for (auto v = g.neighbours(u).find_next(u); v != Bitset::npos; v = g.neighbours(u).find_next(v))
                if ((g.neighbours(u) & g.neighbours(v)).any())
                    return false;
        return true;
    }

    auto all_vertices(const Graph & g) -> VertexSet
    {
        VertexSet result(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            result[v] = v;
        return result;
    }

    auto to_bitset(size_t order, const VertexSet & s) -> Bitset
    {
        Bitset result(order);
        for (auto v : s) {
            if (v >= order)
                throw IndexOutOfRange("vertex " + to_string(v) + " is not below " + to_string(order));
            result.set(v);
        }
        return result;
    }

    auto to_vertex_set(const Bitset & b) -> VertexSet
    {
        VertexSet result;
        result.reserve(b.count());
        for (auto v = b.find_first(); v != Bitset::npos; v = b.find_next(v))
            result.push_back(static_cast<Vertex>(v));
        return result;
    }

    auto complete_graph(size_t n) -> Graph
    {
        vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.push_back(Edge{u, v});
        return make_graph(n, edges);
    }

    auto cycle_graph(size_t n) -> Graph
    {
        if (n < 3)
            throw InvalidParameter("a cycle needs at least 3 vertices");
        vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            edges.push_back(Edge{u, static_cast<Vertex>((u + 1) % n)});
        return make_graph(n, edges);
    }

    auto path_graph(size_t n) -> Graph
    {
        vector<Edge> edges;
        for (Vertex u = 0; u + 1 < n; ++u)
            edges.push_back(Edge{u, u + 1});
        return make_graph(n, edges);
    }

    auto edgeless_graph(size_t n) -> Graph
    {
        return make_graph(n, {});
    }
}
