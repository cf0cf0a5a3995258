#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gsym/graph.hpp"
#include "oracles.hpp"

using namespace gsym;

TEST_CASE("from_edges basics") {
    graph single = graph::from_edges(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    graph k2 = graph::from_edges(2, {{0, 1}});
    CHECK(k2.degree_sequence() == std::vector<int>({1, 1}));

    graph k3 = graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);

    // duplicates collapse
    graph dup = graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(graph::from_edges(2, {{0, 2}}), invalid_edge);
    CHECK_THROWS_AS(graph::from_edges(2, {{1, 1}}), invalid_edge);
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(to_graph6(graph::from_edges(1, {})) == "@");
    CHECK(to_graph6(graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(oracles::complete_graph(3)) == "Bw");
    CHECK(from_graph6("Bw") == oracles::complete_graph(3));
    CHECK(from_graph6(">>graph6<<Bw") == oracles::complete_graph(3));
}

TEST_CASE("graph6 error paths") {
    CHECK_THROWS_AS(to_graph6(oracles::path_graph(63)), unsupported_graph);
    CHECK_THROWS_AS(from_graph6(""), parse_error);
    CHECK_THROWS_AS(from_graph6("B"), parse_error);       // truncated
    CHECK_THROWS_AS(from_graph6("Bww"), parse_error);     // trailing bytes
    CHECK_THROWS_AS(from_graph6("A\x20"), parse_error);   // byte below range
    CHECK_THROWS_AS(from_graph6(std::string_view("\x7f_", 2)), parse_error);

    try {
        from_graph6("B\x1f");
    } catch (const parse_error& e) {
        CHECK(e.offset == 1);
    }
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(0, 30);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        graph g = oracles::random_graph(size(rng), density(rng), rng);
        graph back = from_graph6(to_graph6(g));
        REQUIRE(back == g);
        REQUIRE(back.degree_sequence() == g.degree_sequence());
    }
}

TEST_CASE("degree bookkeeping") {
    graph p3 = oracles::path_graph(3);
    CHECK(p3.degree_sequence() == std::vector<int>({1, 2, 1}));
    CHECK(!p3.regular_degree());
    CHECK(oracles::complete_graph(3).regular_degree() == std::optional<int>(2));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        graph g = oracles::random_graph(20, 0.3, rng);
        int sum = 0;
        for (int d : g.degree_sequence()) sum += d;
        REQUIRE(sum == 2 * g.edge_count());
    }
}

TEST_CASE("edgelist and dot output") {
    CHECK(to_edgelist(graph::from_edges(2, {{0, 1}})) == "0 1\n");
    CHECK(to_edgelist(oracles::complete_graph(3)) == "0 1\n0 2\n1 2\n");

    graph lone = graph::from_edges(1, {});
    CHECK(to_dot(lone) == "graph {\n  0;\n}\n");

    graph labeled = graph::from_edges(2, {{0, 1}});
    labeled.set_label(0, "e");
    labeled.set_label(1, "a");
    std::string dot = to_dot(labeled);
    CHECK(dot.find("label=\"a\"") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);

    // labels do not leak into encodings
    CHECK(to_graph6(labeled) == "A_");
}
