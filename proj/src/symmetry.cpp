#include "gsym/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gsym/analysis.hpp"

namespace gsym {

permutation permutation::identity(int n) {
    permutation p;
    p.image.resize(n);
    for (int i = 0; i < n; ++i) p.image[i] = i;
    return p;
}

permutation permutation::compose(const permutation& then) const {
    permutation out;
    out.image.resize(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) out.image[v] = then.image[image[v]];
    return out;
}

permutation permutation::inverse() const {
    permutation out;
    out.image.resize(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) out.image[image[v]] = (int)v;
    return out;
}

ordered_partition unit_partition(int n) {
    if (n == 0) return {};
    ordered_partition p(1);
    p[0].resize(n);
    for (int i = 0; i < n; ++i) p[0][i] = i;
    return p;
}

ordered_partition refine_partition(const graph& g, ordered_partition p) {
    const int n = g.vertex_count();
    for (auto& cell : p) std::sort(cell.begin(), cell.end());

    bool changed = true;
    while (changed) {
        changed = false;
        // neighbor-count signature of every vertex against the current cells
        std::vector<std::vector<int>> sig(n, std::vector<int>(p.size(), 0));
        for (std::size_t c = 0; c < p.size(); ++c)
            for (int w : p[c])
                for (int v : g.neighbors(w)) ++sig[v][c];

        ordered_partition next;
        for (auto& cell : p) {
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) split[sig[v]].push_back(v);
            if (split.size() > 1) changed = true;
            for (auto& [s, vs] : split) next.push_back(std::move(vs));
        }
        p = std::move(next);
    }
    return p;
}

namespace {

// Individualization-refinement tree walk. Target cell: first non-singleton
// cell of minimum size; branch vertices in ascending index order. `p` must be
// equitable. on_leaf gets the discrete partition as a vertex sequence and
// returns true to stop the search.
bool ir_explore(const graph& g, const ordered_partition& p,
                const std::function<bool(const std::vector<int>&)>& on_leaf) {
    int target = -1;
    std::size_t best = (std::size_t)-1;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].size() > 1 && p[i].size() < best) {
            best = p[i].size();
            target = (int)i;
        }
    if (target < 0) {
        std::vector<int> leaf(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) leaf[i] = p[i][0];
        return on_leaf(leaf);
    }
    for (int v : p[target]) {
        ordered_partition q;
        q.reserve(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if ((int)i == target) {
                q.push_back({v});
                std::vector<int> rest;
                for (int w : p[target])
                    if (w != v) rest.push_back(w);
                q.push_back(std::move(rest));
            } else {
                q.push_back(p[i]);
            }
        }
        if (ir_explore(g, refine_partition(g, q), on_leaf)) return true;
    }
    return false;
}

bool preserves_adjacency(const graph& g, const permutation& p) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
    return true;
}

std::set<permutation> closure_of(const std::vector<permutation>& gens, int n) {
    std::set<permutation> closed = {permutation::identity(n)};
    std::vector<permutation> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<permutation> next;
        for (const auto& p : frontier)
            for (const auto& q : gens) {
                permutation r = p.compose(q);
                if (closed.insert(r).second) next.push_back(std::move(r));
            }
        frontier = std::move(next);
    }
    return closed;
}

permutation_group group_from_elements(std::vector<permutation> elements, int n) {
    std::sort(elements.begin(), elements.end());
    permutation_group out;
    out.degree = n;
    // greedy generator selection: add elements not yet in the closure
    std::set<permutation> closed = {permutation::identity(n)};
    for (const auto& p : elements)
        if (!closed.count(p)) {
            out.generators.push_back(p);
            closed = closure_of(out.generators, n);
        }
    if (closed.size() != elements.size())
        throw std::logic_error("automorphism list not closed under composition");
    out.elements = std::move(elements);
    return out;
}

permutation_group aut_from_partition(const graph& g, const ordered_partition& initial,
                                     int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices) throw too_large("graph exceeds the automorphism policy bound");
    std::vector<int> base;
    std::vector<permutation> found;
    ir_explore(g, refine_partition(g, initial), [&](const std::vector<int>& leaf) {
        if (base.empty() && found.empty()) {
            base = leaf;
            found.push_back(permutation::identity(n));
            return false;
        }
        permutation p = permutation::identity(n);
        for (std::size_t i = 0; i < leaf.size(); ++i) p.image[base[i]] = leaf[i];
        if (leaf != base && preserves_adjacency(g, p)) found.push_back(std::move(p));
        return false;
    });
    if (found.empty()) found.push_back(permutation::identity(n));  // n == 0
    return group_from_elements(std::move(found), n);
}

}  // namespace

permutation_group automorphism_group(const graph& g, int max_vertices) {
    return aut_from_partition(g, unit_partition(g.vertex_count()), max_vertices);
}

permutation_group automorphisms_fixing(const graph& g, const std::vector<int>& fixed,
                                       int max_vertices) {
    const int n = g.vertex_count();
    ordered_partition initial;
    std::vector<bool> is_fixed(n, false);
    for (int f : fixed) {
        initial.push_back({f});
        is_fixed[f] = true;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!is_fixed[v]) rest.push_back(v);
    if (!rest.empty()) initial.push_back(std::move(rest));
    permutation_group a = aut_from_partition(g, initial, max_vertices);
    std::vector<permutation> kept;
    for (const auto& p : a.elements) {
        bool ok = true;
        for (int f : fixed) ok = ok && p(f) == f;
        if (ok) kept.push_back(p);
    }
    return group_from_elements(std::move(kept), n);
}

std::vector<std::vector<int>> vertex_orbits(const permutation_group& a) {
    const int n = a.degree;
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < n; ++v) {
        if (orbit_of[v] >= 0) continue;
        std::vector<int> orbit = {v};
        orbit_of[v] = (int)orbits.size();
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& gen : a.generators) {
                int w = gen(orbit[i]);
                if (orbit_of[w] < 0) {
                    orbit_of[w] = (int)orbits.size();
                    orbit.push_back(w);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

namespace {

template <typename MapFn>
std::vector<std::vector<std::pair<int, int>>> pair_orbits(
    const permutation_group& a, const std::vector<std::pair<int, int>>& items, MapFn apply) {
    std::set<std::pair<int, int>> remaining(items.begin(), items.end());
    std::vector<std::vector<std::pair<int, int>>> orbits;
    while (!remaining.empty()) {
        auto seed = *remaining.begin();
        std::set<std::pair<int, int>> orbit = {seed};
        std::vector<std::pair<int, int>> frontier = {seed};
        remaining.erase(seed);
        while (!frontier.empty()) {
            std::vector<std::pair<int, int>> next;
            for (auto item : frontier)
                for (const auto& gen : a.generators) {
                    auto moved = apply(gen, item);
                    if (orbit.insert(moved).second) {
                        remaining.erase(moved);
                        next.push_back(moved);
                    }
                }
            frontier = std::move(next);
        }
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> edge_orbits(const permutation_group& a,
                                                          const graph& g) {
    return pair_orbits(a, g.edges(), [](const permutation& p, std::pair<int, int> e) {
        int u = p(e.first), v = p(e.second);
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    });
}

std::vector<std::vector<std::pair<int, int>>> arc_orbits(const permutation_group& a,
                                                         const graph& g) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return pair_orbits(a, arcs, [](const permutation& p, std::pair<int, int> arc) {
        return std::make_pair(p(arc.first), p(arc.second));
    });
}

std::optional<permutation> find_arc_reversal(const graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v))
        throw not_an_edge("arc endpoints are not an edge");
    const int n = g.vertex_count();

    auto with_pair = [&](int first, int second) {
        ordered_partition p = {{first}, {second}};
        std::vector<int> rest;
        for (int w = 0; w < n; ++w)
            if (w != first && w != second) rest.push_back(w);
        if (!rest.empty()) p.push_back(std::move(rest));
        return refine_partition(g, p);
    };

    // base leaf of the target coloring (v, u); candidate maps send the leaves
    // of the (u, v) tree onto it positionally
    std::vector<int> base;
    ir_explore(g, with_pair(v, u), [&](const std::vector<int>& leaf) {
        base = leaf;
        return true;
    });

    std::optional<permutation> result;
    ir_explore(g, with_pair(u, v), [&](const std::vector<int>& leaf) {
        permutation p = permutation::identity(n);
        for (std::size_t i = 0; i < leaf.size(); ++i) p.image[leaf[i]] = base[i];
        if (p(u) == v && p(v) == u && preserves_adjacency(g, p)) {
            result = std::move(p);
            return true;
        }
        return false;
    });
    return result;
}

symmetry_report classify(const graph& g) {
    symmetry_report r;
    r.n = g.vertex_count();
    r.edge_count = g.edge_count();
    r.regular_degree = g.regular_degree();

    permutation_group a = automorphism_group(g);
    r.aut_order = a.order();
    r.vertex_orbit_count = (int)vertex_orbits(a).size();
    r.edge_orbit_count = (int)edge_orbits(a, g).size();
    r.arc_orbit_count = (int)arc_orbits(a, g).size();
    r.vertex_transitive = r.vertex_orbit_count == 1;
    r.edge_transitive = r.edge_orbit_count == 1;
    r.arc_transitive = r.arc_orbit_count == 1;

    if (r.arc_transitive)
        r.classification = "arc-transitive";
    else if (r.vertex_transitive && r.edge_transitive)
        r.classification = "half-transitive";
    else if (r.edge_transitive)
        r.classification = "edge-but-not-vertex-transitive";
    else if (r.vertex_transitive)
        r.classification = "vertex-but-not-edge-transitive";
    else
        r.classification = "other";

    r.girth = girth(g);
    r.diameter = diameter(g);
    return r;
}

nlohmann::json symmetry_report::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["edge_count"] = edge_count;
    j["regular_degree"] = regular_degree ? nlohmann::json(*regular_degree) : nlohmann::json();
    j["vertex_orbit_count"] = vertex_orbit_count;
    j["edge_orbit_count"] = edge_orbit_count;
    j["arc_orbit_count"] = arc_orbit_count;
    j["aut_order"] = aut_order;
    j["vertex_transitive"] = vertex_transitive;
    j["edge_transitive"] = edge_transitive;
    j["arc_transitive"] = arc_transitive;
    j["classification"] = classification;
    return j;
}

}  // namespace gsym
