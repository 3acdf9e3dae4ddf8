#include <doctest.h>

#include <sstream>

#include "cisenum/errors.hpp"
#include "cisenum/graph.hpp"
#include "test_util.hpp"

using namespace cisenum;

TEST_CASE("parse: three-vertex path") {
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("parse: duplicate edges collapse") {
    Graph g = parse_edge_list("0 1\n0 1");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    Graph reversed = parse_edge_list("0 1\n1 0");
    CHECK(reversed.edge_count() == 1);
    CHECK(reversed == g);
}

TEST_CASE("parse: self-loop rejected") {
    CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError);
}

TEST_CASE("parse: comments, blank lines, CRLF") {
    Graph g = parse_edge_list("# a comment\r\n\r\n0 1\r\n1 2\r\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse: header declares trailing isolated vertices") {
    Graph g = parse_edge_list("n 5\n0 1\n");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("parse: id at or beyond declared count rejected") {
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 2"), ValidationError);
}

TEST_CASE("parse: malformed lines carry the line number") {
    try {
        parse_edge_list("0 1\nx 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 3\nn 4\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
}

TEST_CASE("parse: empty input yields the empty graph") {
    Graph g = parse_edge_list("");
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(g.connected_components().empty());
}

TEST_CASE("neighbors are sorted") {
    Graph path = testutil::path_graph(3);
    CHECK(std::vector<VertexId>(path.neighbors(1).begin(), path.neighbors(1).end()) ==
          std::vector<VertexId>{0, 2});
    CHECK(std::vector<VertexId>(path.neighbors(0).begin(), path.neighbors(0).end()) ==
          std::vector<VertexId>{1});

    Graph isolated = parse_edge_list("n 1\n");
    CHECK(isolated.neighbors(0).empty());
}

TEST_CASE("connected components") {
    Graph path = testutil::path_graph(3);
    auto comps = path.connected_components();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet({0, 1, 2}));

    Graph two = parse_edge_list("0 1\n2 3\n");
    auto pair = two.connected_components();
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == VertexSet({0, 1}));
    CHECK(pair[1] == VertexSet({2, 3}));

    CHECK(Graph().connected_components().empty());
}

TEST_CASE("serialization round-trips, isolated vertices included") {
    auto roundtrip = [](const Graph& g) {
        Graph reparsed = parse_edge_list(g.to_edge_list());
        CHECK(reparsed == g);
    };
    roundtrip(testutil::path_graph(6));
    roundtrip(parse_edge_list("n 7\n0 1\n2 3\n"));
    roundtrip(Graph());
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        roundtrip(testutil::gnp_graph(9, 0.3, seed));
    }
}

TEST_CASE("components partition the vertex set") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = testutil::gnp_graph(10, 0.2, seed);
        std::vector<char> covered(10, 0);
        for (const auto& comp : g.connected_components()) {
            for (VertexId v : comp) {
                CHECK_FALSE(covered[static_cast<std::size_t>(v)]);
                covered[static_cast<std::size_t>(v)] = 1;
            }
        }
        CHECK(std::count(covered.begin(), covered.end(), 1) == 10);
    }
}

TEST_CASE("edge count is half the degree sum and max_degree is attained") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = testutil::gnp_graph(12, 0.4, seed);
        std::int64_t degree_sum = 0;
        int max_deg = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            degree_sum += g.degree(v);
            max_deg = std::max(max_deg, g.degree(v));
        }
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(max_deg == g.max_degree());
    }
}

TEST_CASE("labels are the input ids") {
    Graph g = parse_edge_list("0 1\n1 2\n");
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.label_of(v) == v);
}
