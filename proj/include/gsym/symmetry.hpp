#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsym/graph.hpp"

#include "json.hpp"

namespace gsym {

struct too_large : graph_error {
    using graph_error::graph_error;
};

struct not_an_edge : graph_error {
    using graph_error::graph_error;
};

// Permutation of [0, n) as an explicit image table.
struct permutation {
    std::vector<int> image;

    int degree() const { return (int)image.size(); }
    int operator()(int v) const { return image[v]; }

    static permutation identity(int n);
    permutation compose(const permutation& then) const;  // v -> then(this(v))
    permutation inverse() const;

    bool operator==(const permutation&) const = default;
    bool operator<(const permutation& o) const { return image < o.image; }
};

// A permutation group at desk scale: every element materialized, plus a small
// generator subset whose closure reproduces the element list.
struct permutation_group {
    int degree = 0;
    std::vector<permutation> elements;
    std::vector<permutation> generators;

    std::size_t order() const { return elements.size(); }
};

// Ordered partition of [0, n) into non-empty cells.
using ordered_partition = std::vector<std::vector<int>>;

ordered_partition unit_partition(int n);

// Coarsest equitable refinement of `initial`: in the result every vertex of a
// cell has the same number of neighbors in every cell. Deterministic: cells
// split by sorted neighbor-count signature, ties kept in original cell order.
ordered_partition refine_partition(const graph& g, ordered_partition initial);

// Full automorphism group by individualization-refinement backtracking.
// Deterministic; every returned permutation is verified to preserve adjacency.
permutation_group automorphism_group(const graph& g, int max_vertices = 128);

// Automorphisms that fix every vertex of `fixed` pointwise (each fixed vertex
// is individualized in the initial partition).
permutation_group automorphisms_fixing(const graph& g, const std::vector<int>& fixed,
                                       int max_vertices = 128);

std::vector<std::vector<int>> vertex_orbits(const permutation_group& a);
std::vector<std::vector<std::pair<int, int>>> edge_orbits(const permutation_group& a,
                                                          const graph& g);
// Arcs are ordered adjacent pairs; there are exactly 2 * edge_count of them.
std::vector<std::vector<std::pair<int, int>>> arc_orbits(const permutation_group& a,
                                                         const graph& g);

// An automorphism mapping the arc (u, v) to (v, u), if one exists. Found by
// backtracking with u, v individualized to v, u in the initial partition.
std::optional<permutation> find_arc_reversal(const graph& g, int u, int v);

struct symmetry_report {
    int n = 0;
    int edge_count = 0;
    std::optional<int> regular_degree;
    int vertex_orbit_count = 0;
    int edge_orbit_count = 0;
    int arc_orbit_count = 0;
    std::size_t aut_order = 0;
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    std::string classification;  // arc-transitive | half-transitive |
                                 // edge-but-not-vertex-transitive |
                                 // vertex-but-not-edge-transitive | other
    std::optional<int> girth;     // nullopt: acyclic
    std::optional<int> diameter;  // nullopt: disconnected

    nlohmann::json to_json() const;
};

symmetry_report classify(const graph& g);

}  // namespace gsym
