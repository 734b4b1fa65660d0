#include <pollyanna/errors.hh>
#include <pollyanna/solvers.hh>

#include <algorithm>
#include <chrono>
#include <string>

using std::size_t;
using std::vector;

namespace pollyanna
{
    namespace
    {
        constexpr size_t uncoloured = static_cast<size_t>(-1);

        auto seconds_since(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }

        /// Incremental DSATUR state: per-vertex counts of neighbours holding each colour.
        class DsaturState
        {
            public:
                DsaturState(const Graph & g, size_t k) :
                    _g(g),
                    _k(k),
                    colour(g.order(), uncoloured),
                    _neighbour_count(g.order() * k, 0),
                    _saturation(g.order(), 0),
                    _free_degree(g.order(), 0)
                {
                    for (Vertex v = 0; v < g.order(); ++v)
                        _free_degree[v] = g.degree(v);
                }

                // Largest saturation, then most uncoloured neighbours, then smallest index.
                auto select() const -> Vertex
                {
                    Vertex best = 0;
                    bool found = false;
                    for (Vertex v = 0; v < _g.order(); ++v) {
                        if (colour[v] != uncoloured)
                            continue;
                        if (! found || _saturation[v] > _saturation[best] ||
                                (_saturation[v] == _saturation[best] && _free_degree[v] > _free_degree[best])) {
                            best = v;
                            found = true;
                        }
                    }
                    return best;
                }

                auto blocked(Vertex v, size_t c) const -> bool
                {
                    return _neighbour_count[v * _k + c] != 0;
                }

                /// Returns false if some uncoloured neighbour has no colour left.
                auto assign(Vertex v, size_t c) -> bool
                {
                    bool ok = true;
                    colour[v] = c;
                    auto & n = _g.neighbours(v);
                    for (auto w = n.find_first(); w != Bitset::npos; w = n.find_next(w)) {
                        if (_neighbour_count[w * _k + c]++ == 0)
                            ++_saturation[w];
                        --_free_degree[w];
                        if (colour[w] == uncoloured && _saturation[w] == _k)
                            ok = false;
                    }
                    return ok;
                }

                auto unassign(Vertex v) -> void
                {
                    auto c = colour[v];
                    colour[v] = uncoloured;
                    auto & n = _g.neighbours(v);
                    for (auto w = n.find_first(); w != Bitset::npos; w = n.find_next(w)) {
                        if (--_neighbour_count[w * _k + c] == 0)
                            --_saturation[w];
                        ++_free_degree[w];
                    }
                }

            private:
                const Graph & _g;
                size_t _k;

            public:
                vector<size_t> colour;

            private:
                vector<unsigned> _neighbour_count;
                vector<size_t> _saturation;
                vector<size_t> _free_degree;
        };

        class ColourSearch
        {
            public:
                ColourSearch(const Graph & g, size_t k, const Budget & budget, SearchStats & stats) :
                    _g(g),
                    _k(k),
                    _state(g, k),
                    _guard(budget, stats)
                {
                }

                auto run() -> Colourability
                {
                    if (_g.order() == 0)
                        return Colourability::colourable;
                    if (_k == 0)
                        return Colourability::not_colourable;
                    if (search(0, 0))
                        return Colourability::colourable;
                    return _guard.aborted() ? Colourability::unknown : Colourability::not_colourable;
                }

                auto colours() const -> const vector<size_t> & { return _state.colour; }

            private:
                auto search(size_t done, size_t used) -> bool
                {
                    if (! _guard.tick())
                        return false;
                    if (done == _g.order())
                        return true;

                    auto v = _state.select();
                    // A colour that has never been used is interchangeable with
                    // every other unused one, so only the first is tried.
                    auto limit = std::min(used + 1, _k);
                    for (size_t c = 0; c < limit; ++c) {
                        if (_state.blocked(v, c))
                            continue;
                        bool ok = _state.assign(v, c);
                        if (ok && search(done + 1, std::max(used, c + 1)))
                            return true;
                        _state.unassign(v);
                        if (_guard.aborted())
                            return false;
                    }
                    return false;
                }

                const Graph & _g;
                size_t _k;
                DsaturState _state;
                SearchGuard _guard;
        };

        auto to_coloring(const vector<size_t> & zero_based) -> Coloring
        {
            Coloring result;
            for (auto c : zero_based) {
                result.assignment.push_back(c + 1);
                result.colors_used = std::max(result.colors_used, c + 1);
            }
            return normalise(result);
        }

        /// Writes a component's colouring into the whole-graph assignment.
        auto scatter(const Coloring & part, const VertexSet & original, Coloring & whole) -> void
        {
            for (size_t i = 0; i < original.size(); ++i)
                whole.assignment[original[i]] = part.assignment[i];
            whole.colors_used = std::max(whole.colors_used, part.colors_used);
        }
    }

    auto dsatur_greedy(const Graph & g) -> Coloring
    {
        auto k = std::max<size_t>(g.order(), 1);
        DsaturState state(g, k);
        for (size_t done = 0; done < g.order(); ++done) {
            auto v = state.select();
            size_t c = 0;
            while (state.blocked(v, c))
                ++c;
            state.assign(v, c);
        }
        return to_coloring(state.colour);
    }

    auto k_colorable(const Graph & g, long k, const Budget & budget) -> KColorResult
    {
        if (k < 0)
            throw InvalidParameter("k must be non-negative, got " + std::to_string(k));

        auto start = std::chrono::steady_clock::now();
        KColorResult result;
        result.status = Colourability::colourable;
        Coloring whole{0, vector<size_t>(g.order(), 0)};

        // Components are independent; searching them together would let a
        // failure in one backtrack pointlessly through another.
        for (auto & component : components(g)) {
            auto sub = induced_subgraph(g, component);
            ColourSearch search(sub.graph, static_cast<size_t>(k), budget, result.stats);
            auto status = search.run();
            if (status != Colourability::colourable) {
                result.status = status;
                break;
            }
            scatter(to_coloring(search.colours()), sub.original, whole);
        }

        if (result.status == Colourability::colourable)
            result.coloring = normalise(whole);
        result.stats.elapsed_seconds = seconds_since(start);
        return result;
    }

    auto chromatic_number(const Graph & g, const Budget & budget) -> ChromaticResult
    {
        auto start = std::chrono::steady_clock::now();
        ChromaticResult result;
        result.coloring.assignment.assign(g.order(), 0);

        for (auto & component : components(g)) {
            auto sub = induced_subgraph(g, component);
            auto best = dsatur_greedy(sub.graph);

            auto clique = clique_number(sub.graph, budget);
            result.stats.nodes += clique.stats.nodes;
            auto lower = std::max<size_t>(clique.value, 1);

            // Only colourings that beat both the greedy bound and the running
            // maximum over earlier components matter.
            for (auto k = std::max(lower, result.value); k < best.colors_used; ++k) {
                auto attempt = k_colorable(sub.graph, static_cast<long>(k), budget);
                result.stats.nodes += attempt.stats.nodes;
                if (attempt.status == Colourability::colourable) {
                    best = *attempt.coloring;
                    break;
                }
                if (attempt.status == Colourability::unknown) {
                    result.stats.timed_out = true;
                    break;
                }
                lower = k + 1;
            }
            if (clique.stats.timed_out)
                result.stats.timed_out = true;

            scatter(best, sub.original, result.coloring);
            result.value = std::max(result.value, best.colors_used);
            result.lower_bound = std::max(result.lower_bound, std::min(lower, best.colors_used));
        }

        result.coloring = normalise(result.coloring);
        if (! result.stats.timed_out)
            result.lower_bound = result.value;
        result.stats.elapsed_seconds = seconds_since(start);
        return result;
    }
}
