#include "doctest.h"

#include "chromcoh/graph.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace chromcoh;
using namespace testsupport;

TEST_SUITE("graph") {

TEST_CASE("construction validates endpoints") {
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(-1, {}), GraphError);
    Graph g(3, {{0, 1}, {1, 1}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_loop());
    CHECK(g.degree(1) == 3);
    CHECK_FALSE(polygon(3).has_loop());
}

TEST_CASE("edge subsets") {
    CHECK_THROWS_AS(EdgeSubset(3, 0b1000), GraphError);
    EdgeSubset s(4, 0b0101);
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(1));
    CHECK(s.count() == 2);
    CHECK(s.with(1).bits() == 0b0111);
    CHECK(EdgeSubset::full(4).count() == 4);
    CHECK(EdgeSubset::empty(4).count() == 0);
}

TEST_CASE("spanning components are canonical") {
    const Graph p3 = polygon(3);
    CHECK(spanning_components(p3, EdgeSubset::empty(3)).count == 3);
    CHECK(spanning_components(p3, EdgeSubset::full(3)).count == 1);
    auto part = spanning_components(p3, EdgeSubset(3, 0b010));  // edge 1-2
    CHECK(part.count == 2);
    CHECK(part.component_of == std::vector<int>{0, 1, 1});
    CHECK(part.representatives() == std::vector<Vertex>{0, 1});
    CHECK_THROWS_AS(spanning_components(p3, EdgeSubset(2, 0)), GraphError);
}

TEST_CASE("component counts match BFS on the corpus") {
    for (const auto& [name, g] : acceptance_corpus()) {
        CAPTURE(name);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.num_edges()); ++s)
            REQUIRE(spanning_components(g, EdgeSubset(g.num_edges(), s)).count == bfs_component_count(g, s));
    }
}

TEST_CASE("deletion and contraction") {
    const Graph p3 = polygon(3);
    const Graph d = delete_edge(p3, 1);
    CHECK(d.num_edges() == 2);
    CHECK(d.num_vertices() == 3);
    auto c = contract_edge(p3, 1);  // 1-2 merges into 1
    CHECK_FALSE(c.was_loop);
    CHECK(c.graph.num_vertices() == 2);
    CHECK(c.graph.num_edges() == 2);
    CHECK(c.vertex_map == std::vector<Vertex>{0, 1, 1});
    for (auto [a, b] : c.graph.edges()) CHECK(((a == 0 && b == 1) || (a == 1 && b == 0)));
    auto l = contract_edge(loop_graph(), 0);
    CHECK(l.was_loop);
    CHECK(l.graph.num_edges() == 0);
    CHECK(l.graph.num_vertices() == 1);
    // Contracting one of two parallel edges leaves a loop.
    auto m = contract_edge(double_edge(), 0);
    CHECK(m.graph.has_loop());
    CHECK_THROWS(delete_edge(p3, 3));
}

TEST_CASE("permutation, union and multi-edge collapse") {
    const Graph p3 = polygon(3);
    const Graph q = permute_edges(p3, {2, 0, 1});
    CHECK(q.edge(2) == p3.edge(0));
    CHECK(q.edge(0) == p3.edge(1));
    CHECK_THROWS_AS(permute_edges(p3, {0, 0, 1}), GraphError);
    CHECK_THROWS_AS(permute_edges(p3, {0, 1}), GraphError);
    const Graph u = disjoint_union(p3, path_tree(1));
    CHECK(u.num_vertices() == 5);
    CHECK(u.num_edges() == 4);
    CHECK(u.edge(3) == Edge{3, 4});
    CHECK(components(u).count == 2);
    const Graph c = collapse_multi_edges(Graph(3, {{0, 1}, {1, 0}, {1, 2}, {0, 1}}));
    CHECK(c.num_edges() == 2);
}

TEST_CASE("graph file format") {
    const Graph g = parse_graph_string("# comment\nv 3\n\n  # indented comment\ne 0 1\ne 1 2\n");
    CHECK(g == path_tree(2));
    CHECK(parse_graph_string(format_graph(bowtie())) == bowtie());
    CHECK_THROWS_AS(parse_graph_string("e 0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph_string("v 2\ne 0 5\n"), GraphError);
    CHECK_THROWS_AS(parse_graph_string("v 2\nx 0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph_string("v 2\ne 0\n"), GraphError);
    CHECK_THROWS_AS(parse_graph_string("v 2\ne 0 1 # no inline comments\n"), GraphError);
    CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), GraphError);
    try {
        parse_graph_string("v 2\ne 0 1\ne 0 9\n");
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(load_graph(std::string(CHROMCOH_TEST_DATA) + "/g2.txt") == triangles_on_edge());
}

TEST_CASE("corpus enumeration") {
    // Connected graphs up to isomorphism with at most 3 edges:
    // K1, K2, P3-path, triangle, star K1,3, path on 4 vertices.
    CHECK(connected_graphs(3).size() == 6);
    // Counts by edge number 0..5: 1, 1, 1, 3, 5, 12.
    CHECK(connected_graphs(5).size() == 23);
}

}
