#include "gsym/cayley.hpp"

#include <algorithm>
#include <set>

namespace gsym {

generating_set generating_set::make(const finite_group& g, std::vector<int> k) {
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    for (int x : k)
        if (x == g.identity())
            throw invalid_connection_set("identity not allowed in a connection set");
    std::set<int> cl(k.begin(), k.end());
    for (int x : k) cl.insert(g.inv(x));
    generating_set out;
    out.k = std::move(k);
    out.closure.assign(cl.begin(), cl.end());
    return out;
}

condition_report check_generating_conditions(const finite_group& g, const std::vector<int>& k,
                                             const std::vector<int>& gens_for_aut) {
    generating_set gs = generating_set::make(g, k);

    condition_report r;
    r.generates = (int)generated_closure(g, gs.k).size() == g.order();

    std::set<int> k_set(gs.k.begin(), gs.k.end());
    r.cond1 = true;
    for (int x : gs.k)
        if (k_set.count(g.inv(x))) r.cond1 = false;

    r.automorphisms = enumerate_automorphisms(g, gens_for_aut);

    r.cond2 = true;
    for (int k1 : gs.k)
        for (int k2 : gs.k) {
            bool found = false;
            for (std::size_t i = 0; i < r.automorphisms.size(); ++i)
                if (r.automorphisms[i].mapping[k1] == k2) {
                    r.cond2_witnesses[{k1, k2}] = (int)i;
                    found = true;
                    break;
                }
            if (!found) r.cond2 = false;
        }

    std::set<int> closure_set(gs.closure.begin(), gs.closure.end());
    r.cond3 = true;
    for (std::size_t i = 0; i < r.automorphisms.size() && r.cond3; ++i) {
        const auto& phi = r.automorphisms[i].mapping;
        std::set<int> image_closure, image_k;
        for (int x : gs.closure) image_closure.insert(phi[x]);
        for (int x : gs.k) image_k.insert(phi[x]);
        if (image_closure == closure_set && image_k != k_set) {
            r.cond3 = false;
            r.cond3_counterexample = (int)i;
        }
    }
    return r;
}

graph cayley_graph(const finite_group& g, const std::vector<int>& h_set) {
    std::set<int> h(h_set.begin(), h_set.end());
    if (h.count(g.identity()))
        throw invalid_connection_set("identity not allowed in a connection set");
    for (int x : h)
        if (!h.count(g.inv(x)))
            throw not_symmetric("connection set must be inverse-closed");

    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < g.order(); ++x)
        for (int s : h) {
            int y = g.mul(x, s);
            if (x < y) edges.emplace_back(x, y);
        }
    graph out = graph::from_edges(g.order(), edges);
    for (int x = 0; x < g.order(); ++x) out.set_label(x, g.label(x));
    return out;
}

graph doyle_graph() {
    finite_group g = finite_group::make_modular27();
    int a = g.named('a');
    int c = g.named('c');
    return cayley_graph(g, {a, c, g.inv(a), g.inv(c)});
}

}  // namespace gsym
