#include "doctest.h"
#include "oracles.hh"

#include <pollyanna/dimacs.hh>
#include <pollyanna/errors.hh>

#include <random>
#include <sstream>

using namespace pollyanna;

namespace
{
    auto parse(const std::string & text) -> Graph
    {
        std::istringstream in(text);
        return read_dimacs(in);
    }
}

TEST_CASE("reading DIMACS")
{
    auto g = parse("c a comment\np edge 3 2\ne 1 2\nc another\ne 3 2\n");
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    CHECK(parse("p edge 0 0\n").order() == 0);
    CHECK(parse("p col 2 1\r\ne 1 2\r\n").size() == 1);

    // both orientations of an edge collapse to one
    CHECK(parse("p edge 2 2\ne 1 2\ne 2 1\n").size() == 1);
}

TEST_CASE("DIMACS errors")
{
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("e 1 2\np edge 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\nx 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 1\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\np edge 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("p matrix 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 1 2 3\n"), ParseError);
}

TEST_CASE("writing DIMACS sorts edges with u < v")
{
    auto g = make_graph(4, {{3, 0}, {2, 1}, {1, 0}});
    std::ostringstream out;
    write_dimacs(out, g, {"hello"});
    CHECK(out.str() == "c hello\np edge 4 3\ne 1 2\ne 1 4\ne 2 3\n");
}

TEST_CASE("DIMACS round trip")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_graph(std::uniform_int_distribution<std::size_t>(0, 30)(rng), 0.3, rng);
        std::stringstream buffer;
        write_dimacs(buffer, g);
        auto back = read_dimacs(buffer);
        CHECK(back == g);

        std::stringstream again;
        write_dimacs(again, back);
        std::stringstream first;
        write_dimacs(first, g);
        CHECK(again.str() == first.str());
    }
}
