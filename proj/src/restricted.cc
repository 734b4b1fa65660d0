#include <pollyanna/errors.hh>
#include <pollyanna/solvers.hh>

#include <chrono>
#include <string>

using std::size_t;
using std::vector;

namespace pollyanna
{
    namespace
    {
        /// Sequential greedy colouring restricted to `keep`; bounds chi of
        /// every induced subgraph inside `keep`.
        auto greedy_bound(const Graph & g, const Bitset & keep) -> size_t
        {
            Bitset uncoloured = keep;
            size_t colours = 0;
            while (uncoloured.any()) {
                ++colours;
                Bitset available = uncoloured;
                for (auto v = available.find_first(); v != Bitset::npos; v = available.find_next(v)) {
                    available -= g.neighbours(static_cast<Vertex>(v));
                    uncoloured.reset(v);
                }
            }
            return colours;
        }

        class TransversalSearch
        {
            public:
                TransversalSearch(const Graph & g, vector<Bitset> cliques, const Budget & budget, RestrictedChiResult & result) :
                    _g(g),
                    _cliques(std::move(cliques)),
                    _budget(budget),
                    _guard(budget, result.stats),
                    _result(result)
                {
                }

                /// `kept` vertices are committed to stay; every clique must
                /// lose at least one vertex of `kept`'s complement.
                auto search(const Bitset & remaining, const Bitset & kept) -> void
                {
                    if (! _guard.tick())
                        return;
                    if (greedy_bound(_g, remaining) <= _result.value)
                        return;

                    // Branch on the surviving clique with fewest deletable vertices.
                    const Bitset * branch = nullptr;
                    size_t branch_choices = 0;
                    for (auto & clique : _cliques) {
                        if (! clique.is_subset_of(remaining))
                            continue;
                        auto choices = (clique - kept).count();
                        if (choices == 0)
                            return;
                        if (! branch || choices < branch_choices) {
                            branch = &clique;
                            branch_choices = choices;
                        }
                    }

                    if (! branch) {
                        leaf(remaining);
                        return;
                    }

                    Bitset choices = *branch - kept;
                    Bitset next_kept = kept;
                    for (auto v = choices.find_first(); v != Bitset::npos; v = choices.find_next(v)) {
                        Bitset next_remaining = remaining;
                        next_remaining.reset(v);
                        search(next_remaining, next_kept);
                        if (_guard.aborted())
                            return;
                        // Later branches keep the vertices earlier branches deleted,
                        // so no transversal is produced twice.
                        next_kept.set(v);
                    }
                }

            private:
                auto leaf(const Bitset & remaining) -> void
                {
                    auto sub = induced_subgraph(_g, remaining);
                    auto check = k_colorable(sub.graph, static_cast<long>(_result.value), _budget);
                    _result.stats.nodes += check.stats.nodes;
                    if (check.status == Colourability::colourable)
                        return;
                    if (check.status == Colourability::unknown) {
                        _result.stats.timed_out = true;
                        return;
                    }

                    auto chi = chromatic_number(sub.graph, _budget);
                    _result.stats.nodes += chi.stats.nodes;
                    if (chi.stats.timed_out)
                        _result.stats.timed_out = true;
                    // Only the proven part is safe to report as attained.
                    if (chi.lower_bound > _result.value) {
                        _result.value = chi.lower_bound;
                        _result.witness = sub.original;
                    }
                }

                const Graph & _g;
                vector<Bitset> _cliques;
                const Budget & _budget;
                SearchGuard _guard;
                RestrictedChiResult & _result;
        };
    }

    auto chi_restricted(const Graph & g, long n, const Budget & budget) -> RestrictedChiResult
    {
        if (n < 0)
            throw InvalidParameter("n must be non-negative, got " + std::to_string(n));

        auto start = std::chrono::steady_clock::now();
        RestrictedChiResult result;
        result.n = n;

        // Only the empty subgraph has clique number 0.
        if (n == 0 || g.order() == 0)
            return result;

        auto omega = clique_number(g, budget);
        result.stats.nodes += omega.stats.nodes;
        if (! omega.stats.timed_out && omega.value <= static_cast<size_t>(n)) {
            auto chi = chromatic_number(g, budget);
            result.value = chi.lower_bound;
            result.witness = all_vertices(g);
            result.stats.nodes += chi.stats.nodes;
            result.stats.timed_out = chi.stats.timed_out;
            result.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return result;
        }

        vector<Bitset> cliques;
        for (auto & c : cliques_of_size(g, static_cast<size_t>(n) + 1))
            cliques.push_back(to_bitset(g.order(), c));

        // Any single vertex is a subgraph with clique number 1 <= n.
        result.value = 1;
        result.witness = {0};

        TransversalSearch search(g, std::move(cliques), budget, result);
        Bitset remaining(g.order()), kept(g.order());
        remaining.set();
        search.search(remaining, kept);

        if (omega.stats.timed_out)
            result.stats.timed_out = true;
        result.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
}
