#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsym/graph.hpp"

#include "json.hpp"

namespace gsym {

struct precondition_failed : graph_error {
    using graph_error::graph_error;
};

struct not_an_arc : graph_error {
    using graph_error::graph_error;
};

// Unreachable vertices get distance -1.
std::vector<int> bfs_distances(const graph& g, int v);

// Induced subgraph on the vertices at distance <= radius from center,
// indexed by ascending original vertex index.
struct ball_subgraph {
    graph induced;
    std::vector<int> vertex_map;  // subgraph index -> original index
    int center = 0;               // original index
    int radius = 0;

    int center_index() const;  // subgraph index of the center
};

ball_subgraph make_ball(const graph& g, int v, int radius);

std::optional<int> girth(const graph& g);     // nullopt: acyclic
std::optional<int> diameter(const graph& g);  // nullopt: disconnected or empty

// Outcome of the local obstruction check: if no automorphism of the
// radius-r ball around `center` fixes the center and carries u to u_inv,
// then no automorphism of the whole (vertex-transitive) graph reverses
// the arc (center, u) either.
struct obstruction_certificate {
    int ball_size = 0;
    int fixing_aut_count = 0;  // ball automorphisms fixing the center
    bool reversal_found = false;
    bool conclusion = false;  // true: the graph is not arc-transitive
    int radius = 0;
    std::string center_label;
    std::vector<std::string> arc_labels;  // labels of u and u_inv

    nlohmann::json to_json() const;
};

// Requires u and u_inv adjacent to center and g vertex-transitive (the
// reduction from arbitrary arc reversals to center-fixing maps needs it).
obstruction_certificate verify_non_arc_transitive_locally(const graph& g, int center, int u,
                                                          int u_inv, int radius = 2);

}  // namespace gsym
