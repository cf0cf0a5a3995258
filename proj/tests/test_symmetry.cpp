#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "gsym/cayley.hpp"
#include "gsym/symmetry.hpp"
#include "oracles.hpp"

using namespace gsym;

namespace {

std::set<std::vector<int>> element_set(const permutation_group& a) {
    std::set<std::vector<int>> out;
    for (const auto& p : a.elements) out.insert(p.image);
    return out;
}

std::set<std::vector<int>> element_set(const std::vector<std::vector<int>>& perms) {
    return {perms.begin(), perms.end()};
}

graph relabel(const graph& g, const std::vector<int>& pi) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pi[u], pi[v]);
    return graph::from_edges(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("refine_partition fixed points and splits") {
    SUBCASE("regular graphs keep the unit partition") {
        graph c5 = oracles::cycle_graph(5);
        ordered_partition p = refine_partition(c5, unit_partition(5));
        REQUIRE(p.size() == 1);
        CHECK(p[0] == std::vector<int>({0, 1, 2, 3, 4}));
    }

    SUBCASE("degree split on a path") {
        ordered_partition p = refine_partition(oracles::path_graph(3), unit_partition(3));
        REQUIRE(p.size() == 2);
        // ends before the middle: lower degree signature sorts first
        CHECK(p[0] == std::vector<int>({0, 2}));
        CHECK(p[1] == std::vector<int>({1}));
    }

    SUBCASE("star splits center from leaves") {
        ordered_partition p = refine_partition(oracles::star_graph(3), unit_partition(4));
        REQUIRE(p.size() == 2);
        std::set<std::vector<int>> cells(p.begin(), p.end());
        CHECK(cells.count({0}));
        CHECK(cells.count({1, 2, 3}));
    }

    SUBCASE("result is equitable") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            graph g = oracles::random_graph(12, 0.3, rng);
            ordered_partition p = refine_partition(g, unit_partition(12));
            for (const auto& cell : p)
                for (std::size_t c2 = 0; c2 < p.size(); ++c2) {
                    int expected = -1;
                    for (int v : cell) {
                        int count = 0;
                        for (int w : p[c2]) count += g.adjacent(v, w) ? 1 : 0;
                        if (expected < 0) expected = count;
                        REQUIRE(count == expected);
                    }
                }
        }
    }
}

TEST_CASE("automorphism groups of named small graphs") {
    CHECK(automorphism_group(oracles::complete_graph(3)).order() == 6);
    CHECK(automorphism_group(oracles::complete_graph(4)).order() == 24);
    CHECK(automorphism_group(oracles::cycle_graph(5)).order() == 10);
    CHECK(automorphism_group(oracles::path_graph(4)).order() == 2);
    CHECK(automorphism_group(oracles::star_graph(4)).order() == 24);

    // 5-cycle against the factorial oracle
    CHECK(oracles::brute_force_automorphisms(oracles::cycle_graph(5)).size() == 10);
}

TEST_CASE("backtracking equals factorial enumeration on small graphs") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> size(1, 7);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        graph g = oracles::random_graph(size(rng), density(rng), rng);
        auto expected = element_set(oracles::brute_force_automorphisms(g));
        auto got = element_set(automorphism_group(g));
        REQUIRE(got == expected);
    }
}

TEST_CASE("doyle graph automorphism group") {
    graph d = doyle_graph();
    permutation_group a = automorphism_group(d);
    CHECK(a.order() == 54);

    SUBCASE("matches the independent backtracking oracle") {
        auto oracle = oracles::backtracking_automorphisms(d);
        CHECK(oracle.size() == 54);
        CHECK(element_set(a) == element_set(oracle));
    }

    SUBCASE("every element preserves adjacency") {
        for (const auto& p : a.elements) REQUIRE(oracles::is_automorphism(d, p.image));
    }

    SUBCASE("generators regenerate the group") {
        CHECK(a.generators.size() <= 4);
        std::set<std::vector<int>> closed;
        std::vector<permutation> frontier = {permutation::identity(27)};
        closed.insert(frontier[0].image);
        while (!frontier.empty()) {
            std::vector<permutation> next;
            for (const auto& p : frontier)
                for (const auto& q : a.generators) {
                    permutation r = p.compose(q);
                    if (closed.insert(r.image).second) next.push_back(r);
                }
            frontier = std::move(next);
        }
        CHECK(closed == element_set(a));
    }
}

TEST_CASE("orbit computations") {
    SUBCASE("K3 fully transitive") {
        graph k3 = oracles::complete_graph(3);
        permutation_group a = automorphism_group(k3);
        CHECK(vertex_orbits(a).size() == 1);
        CHECK(edge_orbits(a, k3).size() == 1);
        CHECK(arc_orbits(a, k3).size() == 1);
    }

    SUBCASE("star: center apart, one edge orbit, two arc orbits") {
        graph s = oracles::star_graph(3);
        permutation_group a = automorphism_group(s);
        CHECK(vertex_orbits(a).size() == 2);
        CHECK(edge_orbits(a, s).size() == 1);
        CHECK(arc_orbits(a, s).size() == 2);
    }

    SUBCASE("doyle: two arc orbits of 54") {
        graph d = doyle_graph();
        permutation_group a = automorphism_group(d);
        CHECK(vertex_orbits(a).size() == 1);
        CHECK(edge_orbits(a, d).size() == 1);
        auto arcs = arc_orbits(a, d);
        REQUIRE(arcs.size() == 2);
        CHECK(arcs[0].size() == 54);
        CHECK(arcs[1].size() == 54);
    }
}

TEST_CASE("orbit-stabilizer consistency") {
    std::vector<graph> corpus = {oracles::complete_graph(4), oracles::cycle_graph(6),
                                 oracles::star_graph(4), oracles::path_graph(5),
                                 doyle_graph()};
    for (const auto& g : corpus) {
        permutation_group a = automorphism_group(g);
        auto orbits = vertex_orbits(a);
        std::size_t orbit0 = 0;
        for (const auto& orb : orbits)
            if (std::find(orb.begin(), orb.end(), 0) != orb.end()) orbit0 = orb.size();
        // stabilizer via an independent individualized search
        permutation_group stab = automorphisms_fixing(g, {0});
        REQUIRE(orbit0 * stab.order() == a.order());
    }
}

TEST_CASE("classification") {
    CHECK(classify(oracles::complete_graph(4)).classification == "arc-transitive");
    symmetry_report p3 = classify(oracles::path_graph(3));
    CHECK(p3.classification == "edge-but-not-vertex-transitive");
    CHECK(p3.edge_transitive);
    CHECK(!p3.vertex_transitive);

    symmetry_report d = classify(doyle_graph());
    CHECK(d.classification == "half-transitive");
    CHECK(d.vertex_transitive);
    CHECK(d.edge_transitive);
    CHECK(!d.arc_transitive);
    CHECK(d.aut_order == 54);
    CHECK(d.girth == std::optional<int>(5));
    CHECK(d.diameter == std::optional<int>(3));

    SUBCASE("JSON keys are stable") {
        auto j = d.to_json();
        CHECK(j.size() == 11);
        CHECK(j["classification"] == "half-transitive");
        CHECK(j["aut_order"] == 54);
        CHECK(j["regular_degree"] == 4);
        CHECK(j["arc_orbit_count"] == 2);
    }
}

TEST_CASE("classification is invariant under relabeling") {
    std::mt19937 rng(23);
    std::vector<graph> corpus = {doyle_graph(), oracles::star_graph(3),
                                 oracles::cycle_graph(6)};
    for (const auto& g : corpus) {
        symmetry_report base = classify(g);
        std::vector<int> pi(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) pi[i] = i;
        for (int trial = 0; trial < 3; ++trial) {
            std::shuffle(pi.begin(), pi.end(), rng);
            symmetry_report r = classify(relabel(g, pi));
            REQUIRE(r.aut_order == base.aut_order);
            REQUIRE(r.vertex_orbit_count == base.vertex_orbit_count);
            REQUIRE(r.edge_orbit_count == base.edge_orbit_count);
            REQUIRE(r.arc_orbit_count == base.arc_orbit_count);
            REQUIRE(r.classification == base.classification);
        }
    }
}

TEST_CASE("arc reversals") {
    SUBCASE("C4: a reflection reverses any arc") {
        graph c4 = oracles::cycle_graph(4);
        auto p = find_arc_reversal(c4, 0, 1);
        REQUIRE(p.has_value());
        CHECK((*p)(0) == 1);
        CHECK((*p)(1) == 0);
        CHECK(oracles::is_automorphism(c4, p->image));
    }

    SUBCASE("K2: the swap") {
        auto p = find_arc_reversal(graph::from_edges(2, {{0, 1}}), 0, 1);
        REQUIRE(p.has_value());
        CHECK(p->image == std::vector<int>({1, 0}));
    }

    SUBCASE("doyle: no reversal of (identity, a)") {
        graph d = doyle_graph();
        CHECK(!find_arc_reversal(d, 0, 3).has_value());
        // but (identity, a) does map to (a, identity)'s orbit mate (a^-1, identity)
        CHECK(!find_arc_reversal(d, 3, 0).has_value());
    }

    SUBCASE("non-edge is rejected") {
        CHECK_THROWS_AS(find_arc_reversal(oracles::path_graph(3), 0, 2), not_an_edge);
    }
}

TEST_CASE("policy bound") {
    CHECK_THROWS_AS(automorphism_group(oracles::cycle_graph(6), 5), too_large);
}

TEST_CASE("permutation algebra") {
    permutation a{{1, 2, 0}};
    permutation b{{0, 2, 1}};
    CHECK(a.compose(a.inverse()) == permutation::identity(3));
    CHECK(a.compose(b).image == std::vector<int>({2, 1, 0}));
    CHECK(b.inverse() == b);
}
