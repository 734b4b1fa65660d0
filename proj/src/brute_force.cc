#include <pollyanna/errors.hh>
#include <pollyanna/solvers.hh>

#include <string>

using std::size_t;
using std::vector;

namespace pollyanna
{
    namespace
    {
        auto check_size(const Graph & g) -> void
        {
            if (g.order() > brute_force_limit)
                throw TooLarge("brute-force oracles accept at most " + std::to_string(brute_force_limit) +
                        " vertices, got " + std::to_string(g.order()));
        }

        auto adjacency_matrix(const Graph & g) -> vector<vector<bool>>
        {
            vector<vector<bool>> m(g.order(), vector<bool>(g.order(), false));
            for (auto & [u, v] : g.edges())
                m[u][v] = m[v][u] = true;
            return m;
        }
    }

    auto brute_force_chi(const Graph & g) -> size_t
    {
        check_size(g);
        auto n = g.order();
        if (n == 0)
            return 0;

        auto adj = adjacency_matrix(g);

        // Walk every restricted-growth string (each set partition exactly
        // once), cutting a prefix only when it already has a monochromatic edge.
        vector<size_t> colour(n, 0);
        size_t best = n;
        auto assign = [&](auto & self, size_t v, size_t used) -> void {
            if (used >= best)
                return;
            if (v == n) {
                best = used;
                return;
            }
            for (size_t c = 0; c <= used && c < n; ++c) {
                bool proper = true;
                for (size_t u = 0; u < v; ++u)
                    if (adj[u][v] && colour[u] == c) {
                        proper = false;
                        break;
                    }
                if (! proper)
                    continue;
                colour[v] = c;
                self(self, v + 1, c == used ? used + 1 : used);
            }
        };
        assign(assign, 0, 0);
        return best;
    }

    auto brute_force_omega(const Graph & g) -> size_t
    {
        check_size(g);
        auto n = g.order();
        auto adj = adjacency_matrix(g);

        size_t best = 0;
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            vector<size_t> members;
            for (size_t v = 0; v < n; ++v)
                if (mask & (1ul << v))
                    members.push_back(v);
            if (members.size() <= best)
                continue;
            bool clique = true;
            for (size_t i = 0; i < members.size() && clique; ++i)
                for (size_t j = i + 1; j < members.size() && clique; ++j)
                    clique = adj[members[i]][members[j]];
            if (clique)
                best = members.size();
        }
        return best;
    }
}
