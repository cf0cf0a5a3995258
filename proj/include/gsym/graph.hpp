#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsym {

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_edge : graph_error {
    using graph_error::graph_error;
};

struct unsupported_graph : graph_error {
    using graph_error::graph_error;
};

struct parse_error : graph_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : graph_error(msg + " (offset " + std::to_string(off) + ")"), offset(off) {}
};

// Simple undirected graph, dense bit-row adjacency. No loops, no multi-edges.
// Labels are display metadata only; equality and encodings ignore them.
class graph {
public:
    graph() = default;

    static graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const {
        return (bits_[(std::size_t)u * stride_ + (v >> 6)] >> (v & 63)) & 1;
    }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    std::vector<int> degree_sequence() const;
    std::optional<int> regular_degree() const;

    const std::string& vertex_label(int v) const { return labels_[v]; }
    bool has_labels() const { return labeled_; }
    void set_label(int v, std::string s);

    bool operator==(const graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
    bool labeled_ = false;

    void set_edge(int u, int v);
};

// graph6 short form, n <= 62. Round-trips exactly; a leading ">>graph6<<"
// header is tolerated on input, never written.
std::string to_graph6(const graph& g);
graph from_graph6(std::string_view s);

std::string to_dot(const graph& g);
std::string to_edgelist(const graph& g);

}  // namespace gsym
