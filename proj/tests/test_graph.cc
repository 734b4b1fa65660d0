#include "doctest.h"
#include "oracles.hh"

#include <pollyanna/constructions.hh>
#include <pollyanna/errors.hh>
#include <pollyanna/graph.hh>
#include <pollyanna/solvers.hh>

#include <random>

using namespace pollyanna;

TEST_CASE("make_graph builds the listed edges")
{
    auto k2 = make_graph(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.adjacent(1, 0));

    auto empty = make_graph(0, {});
    CHECK(empty.order() == 0);
    CHECK(empty.size() == 0);

    auto c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.size() == 5);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);
    CHECK(c5 == cycle_graph(5));
}

TEST_CASE("make_graph symmetrises and deduplicates")
{
    auto g = make_graph(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("make_graph rejects bad endpoints")
{
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_graph(0, {{0, 0}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), SelfLoop);
}

TEST_CASE("induced_subgraph")
{
    auto c5 = cycle_graph(5);

    SUBCASE("all vertices is the identity")
    {
        auto sub = induced_subgraph(c5, all_vertices(c5));
        CHECK(sub.graph == c5);
        CHECK(sub.original == all_vertices(c5));
    }

    SUBCASE("empty selection")
    {
        auto sub = induced_subgraph(c5, VertexSet{});
        CHECK(sub.graph.order() == 0);
        CHECK(brute_force_chi(sub.graph) == 0);
        CHECK(brute_force_omega(sub.graph) == 0);
    }

    SUBCASE("three consecutive vertices give a path")
    {
        auto sub = induced_subgraph(c5, VertexSet{0, 1, 2});
        CHECK(sub.graph == path_graph(3));
        CHECK(sub.graph.size() == 2);
    }

    SUBCASE("re-indexing is ascending and the map is returned")
    {
        auto sub = induced_subgraph(c5, VertexSet{4, 0, 2});
        CHECK(sub.original == VertexSet{0, 2, 4});
        // 0-4 is the only edge among {0, 2, 4}
        CHECK(sub.graph.edges() == std::vector<Edge>{{0, 2}});
    }

    SUBCASE("out of range")
    {
        CHECK_THROWS_AS(induced_subgraph(c5, VertexSet{1, 5}), IndexOutOfRange);
    }
}

TEST_CASE("disjoint_union")
{
    auto k2 = complete_graph(2);
    auto two = disjoint_union(k2, k2);
    CHECK(two.order() == 4);
    CHECK(two.size() == 2);
    CHECK(components(two).size() == 2);
    CHECK(two.adjacent(2, 3));

    auto c5 = cycle_graph(5);
    CHECK(disjoint_union(c5, Graph{}) == c5);
    CHECK(disjoint_union(Graph{}, c5) == c5);

    auto x = disjoint_union(c5, k2);
    CHECK(x.order() == 7);
    CHECK(x.size() == 6);
    CHECK(brute_force_omega(x) == 2);
    CHECK(brute_force_chi(x) == 3);
}

TEST_CASE("components")
{
    auto c5 = cycle_graph(5);
    auto c = components(c5);
    REQUIRE(c.size() == 1);
    CHECK(c[0].size() == 5);

    auto two = components(disjoint_union(complete_graph(2), complete_graph(2)));
    CHECK(two == std::vector<VertexSet>{{0, 1}, {2, 3}});

    CHECK(components(Graph{}).empty());
    CHECK_FALSE(is_connected(Graph{}));

    // Ordered by smallest member even when components interleave.
    auto g = make_graph(5, {{0, 3}, {1, 4}});
    CHECK(components(g) == std::vector<VertexSet>{{0, 3}, {1, 4}, {2}});
}

TEST_CASE("is_triangle_free")
{
    CHECK(is_triangle_free(cycle_graph(5)));
    CHECK_FALSE(is_triangle_free(complete_graph(3)));
    auto grotzsch = mycielski_tower(4).graph;
    CHECK(is_triangle_free(grotzsch));
    CHECK_FALSE(oracles::has_triangle_by_triples(grotzsch));
}

TEST_CASE("graph-core properties on random graphs")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        auto n = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
        auto p = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
        auto g = oracles::random_graph(n, p, rng);
        CAPTURE(trial);

        CHECK(induced_subgraph(g, all_vertices(g)).graph == g);
        CHECK(is_triangle_free(g) == (clique_number(g).value <= 2));
        CHECK(is_triangle_free(g) == ! oracles::has_triangle_by_triples(g));
        CHECK(components(g).size() == oracles::component_count(g));

        // chi and omega are monotone under taking induced subgraphs
        auto chi = chromatic_number(g).value;
        auto omega = clique_number(g).value;
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (rng() & 1)
                s.push_back(v);
        auto sub = induced_subgraph(g, s).graph;
        CHECK(chromatic_number(sub).value <= chi);
        CHECK(clique_number(sub).value <= omega);

        auto h = oracles::random_graph(std::uniform_int_distribution<std::size_t>(1, 6)(rng), 0.5, rng);
        if (n > 0)
            CHECK(components(disjoint_union(g, h)).size() == components(g).size() + components(h).size());
    }
}
