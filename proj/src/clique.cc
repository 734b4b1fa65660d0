#include <pollyanna/solvers.hh>

#include <algorithm>
#include <chrono>
#include <numeric>

using std::size_t;
using std::vector;

namespace pollyanna
{
    namespace
    {
        struct CliqueSearch
        {
            vector<Bitset> adj; // in search order
            vector<Vertex> to_original;
            SearchGuard guard;
            vector<Vertex> current, best;

            CliqueSearch(const Graph & g, const Budget & budget, SearchStats & stats) :
                guard(budget, stats)
            {
                // Non-increasing degree, ties by index.
                to_original = all_vertices(g);
                std::stable_sort(to_original.begin(), to_original.end(), [&](Vertex a, Vertex b) {
                    return g.degree(a) > g.degree(b);
                });
                vector<Vertex> position(g.order());
                for (Vertex i = 0; i < g.order(); ++i)
                    position[to_original[i]] = i;

                adj.assign(g.order(), Bitset(g.order()));
                for (auto & [u, v] : g.edges()) {
                    adj[position[u]].set(position[v]);
                    adj[position[v]].set(position[u]);
                }
            }

            auto colour_bounds(const Bitset & p, vector<Vertex> & order, vector<size_t> & bounds) -> void
            {
                Bitset uncoloured = p;
                size_t colour = 0;
                while (uncoloured.any()) {
                    ++colour;
                    Bitset available = uncoloured;
                    for (auto v = available.find_first(); v != Bitset::npos; v = available.find_next(v)) {
                        available -= adj[v];
                        uncoloured.reset(v);
                        order.push_back(static_cast<Vertex>(v));
                        bounds.push_back(colour);
                    }
                }
            }

            auto expand(Bitset p) -> void
            {
                if (! guard.tick())
                    return;

                vector<Vertex> order;
                vector<size_t> bounds;
                colour_bounds(p, order, bounds);

                for (size_t i = order.size(); i-- > 0;) {
                    if (current.size() + bounds[i] <= best.size())
                        return;

                    auto v = order[i];
                    current.push_back(v);
                    Bitset next = p & adj[v];
                    if (next.none()) {
                        if (current.size() > best.size())
                            best = current;
                    }
                    else
                        expand(std::move(next));
                    current.pop_back();
                    p.reset(v);

                    if (guard.aborted())
                        return;
                }
            }
        };
    }

    auto clique_number(const Graph & g, const Budget & budget) -> CliqueResult
    {
        auto start = std::chrono::steady_clock::now();
        CliqueResult result;
        if (g.order() == 0)
            return result;

        CliqueSearch search(g, budget, result.stats);
        Bitset all(g.order());
        all.set();
        search.expand(all);

        for (auto v : search.best)
            result.clique.vertices.push_back(search.to_original[v]);
        std::sort(result.clique.vertices.begin(), result.clique.vertices.end());
        result.value = result.clique.vertices.size();
        result.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    auto cliques_of_size(const Graph & g, size_t size) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        if (size == 0) {
            result.emplace_back();
            return result;
        }

        VertexSet current;
        auto extend = [&](auto & self, const Bitset & candidates) -> void {
            if (current.size() == size) {
                result.push_back(current);
                return;
            }
            if (current.size() + candidates.count() < size)
                return;
            for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
                current.push_back(static_cast<Vertex>(v));
                Bitset later = g.neighbours(static_cast<Vertex>(v));
                // keep only vertices after v so each clique appears once
                later &= candidates;
                for (auto w = later.find_first(); w != Bitset::npos && w <= v; w = later.find_next(w))
                    later.reset(w);
                self(self, later);
                current.pop_back();
            }
        };

        Bitset all(g.order());
        all.set();
        extend(extend, all);
        return result;
    }
}
