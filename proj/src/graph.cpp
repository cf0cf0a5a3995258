#include "gsym/graph.hpp"

#include <algorithm>
#include <sstream>

namespace gsym {

graph graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw invalid_edge("negative vertex count");
    graph g;
    g.n_ = n;
    g.stride_ = (n + 63) / 64;
    g.bits_.assign((std::size_t)n * g.stride_, 0);
    g.labels_.assign(n, "");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_edge("edge endpoint out of range");
        if (u == v) throw invalid_edge("self-loop");
        g.set_edge(u, v);
    }
    return g;
}

void graph::set_edge(int u, int v) {
    bits_[(std::size_t)u * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[(std::size_t)v * stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int graph::degree(int v) const {
    int d = 0;
    for (int b = 0; b < stride_; ++b)
        d += __builtin_popcountll(bits_[(std::size_t)v * stride_ + b]);
    return d;
}

std::vector<int> graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

int graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> graph::degree_sequence() const {
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::optional<int> graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

void graph::set_label(int v, std::string s) {
    labels_.at(v) = std::move(s);
    labeled_ = true;
}

std::string to_graph6(const graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw unsupported_graph("graph6 short form supports n <= 62");
    std::string out;
    out.push_back((char)(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back((char)((acc << (6 - nbits)) + 63));
    return out;
}

graph from_graph6(std::string_view s) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) {
        s.remove_prefix(header.size());
        base = header.size();
    }
    if (s.empty()) throw parse_error("empty graph6 string", base);
    int n = (unsigned char)s[0] - 63;
    if (n < 0 || n > 62) throw parse_error("unsupported graph6 size byte", base);
    const std::size_t need = ((std::size_t)n * (n - 1) / 2 + 5) / 6;
    if (s.size() - 1 < need) throw parse_error("truncated graph6 data", base + s.size());
    if (s.size() - 1 > need) throw parse_error("trailing bytes after graph6 data", base + 1 + need);

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned char c = s[1 + bit / 6];
            if (c < 63 || c > 126) throw parse_error("byte out of graph6 range", base + 1 + bit / 6);
            if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    // padding bits must be zero
    for (std::size_t pad = bit; pad < need * 6; ++pad) {
        unsigned char c = s[1 + pad / 6];
        if (c < 63 || c > 126) throw parse_error("byte out of graph6 range", base + 1 + pad / 6);
        if ((c - 63) >> (5 - pad % 6) & 1)
            throw parse_error("nonzero graph6 padding", base + 1 + pad / 6);
    }
    return graph::from_edges(n, edges);
}

std::string to_dot(const graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels() && !g.vertex_label(v).empty())
            out << " [label=\"" << g.vertex_label(v) << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_edgelist(const graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace gsym
