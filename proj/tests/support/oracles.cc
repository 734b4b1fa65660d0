#include "oracles.hh"

#include <pollyanna/solvers.hh>

#include <algorithm>
#include <numeric>

using pollyanna::Edge;
using pollyanna::Graph;
using pollyanna::Vertex;
using std::size_t;
using std::vector;

namespace oracles
{
    auto matrix_of(const Graph & g) -> Matrix
    {
        Matrix m(g.order(), vector<bool>(g.order(), false));
        for (auto & [u, v] : g.edges())
            m[u][v] = m[v][u] = true;
        return m;
    }

    auto random_graph(size_t n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.push_back(Edge{u, v});
        return pollyanna::make_graph(n, edges);
    }

    auto random_triangle_free_graph(size_t n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        Matrix m(n, vector<bool>(n, false));
        vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (! coin(rng))
                    continue;
                bool closes = false;
                for (size_t w = 0; w < n && ! closes; ++w)
                    closes = m[u][w] && m[v][w];
                if (closes)
                    continue;
                m[u][v] = m[v][u] = true;
                edges.push_back(Edge{u, v});
            }
        return pollyanna::make_graph(n, edges);
    }

    auto has_triangle_by_triples(const Graph & g) -> bool
    {
        auto m = matrix_of(g);
        auto n = g.order();
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a + 1; b < n; ++b)
                for (size_t c = b + 1; c < n; ++c)
                    if (m[a][b] && m[b][c] && m[a][c])
                        return true;
        return false;
    }

    auto component_count(const Graph & g) -> size_t
    {
        vector<size_t> parent(g.order());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        size_t count = g.order();
        for (auto & [u, v] : g.edges()) {
            auto a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                --count;
            }
        }
        return count;
    }

    auto is_hamiltonian_cycle_graph(const Graph & g) -> bool
    {
        auto n = g.order();
        if (n < 3 || g.size() != n)
            return false;
        auto m = matrix_of(g);
        vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool cycle = true;
            for (size_t i = 0; i < n && cycle; ++i)
                cycle = m[perm[i]][perm[(i + 1) % n]];
            if (cycle)
                return true;
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        return false;
    }

    auto all_subset_values(const Graph & g) -> vector<SubsetValues>
    {
        auto n = g.order();
        vector<SubsetValues> result(size_t{1} << n);
        for (size_t mask = 0; mask < result.size(); ++mask) {
            pollyanna::VertexSet s;
            for (Vertex v = 0; v < n; ++v)
                if (mask & (size_t{1} << v))
                    s.push_back(v);
            auto sub = pollyanna::induced_subgraph(g, s).graph;
            result[mask] = SubsetValues{pollyanna::brute_force_omega(sub), pollyanna::brute_force_chi(sub)};
        }
        return result;
    }

    auto naive_chi_restricted(const vector<SubsetValues> & table, long n) -> size_t
    {
        size_t best = 0;
        for (auto & v : table)
            if (static_cast<long>(v.omega) <= n)
                best = std::max(best, v.chi);
        return best;
    }

    auto naive_chi_restricted(const Graph & g, long n) -> size_t
    {
        return naive_chi_restricted(all_subset_values(g), n);
    }
}
