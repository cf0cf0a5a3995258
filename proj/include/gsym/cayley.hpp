#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/group.hpp"

namespace gsym {

struct invalid_connection_set : group_error {
    using group_error::group_error;
};

struct not_symmetric : group_error {
    using group_error::group_error;
};

// An inverse-free candidate set K together with its inverse closure.
struct generating_set {
    std::vector<int> k;        // sorted, identity-free
    std::vector<int> closure;  // K union K^-1, sorted

    static generating_set make(const finite_group& g, std::vector<int> k);
};

// Outcome of the three connection-set conditions:
//   1. K and K^-1 are disjoint.
//   2. every ordered pair (k1, k2) in K x K is linked by a group automorphism.
//   3. every automorphism stabilizing K union K^-1 setwise stabilizes K.
struct condition_report {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
    bool generates = false;

    std::vector<group_automorphism> automorphisms;  // full Aut(G), enumeration order
    // (k1, k2) -> index into `automorphisms` of a witness with phi(k1) = k2
    std::map<std::pair<int, int>, int> cond2_witnesses;
    std::optional<int> cond3_counterexample;  // index of a violating automorphism

    bool all_pass() const { return cond1 && cond2 && cond3 && generates; }
};

condition_report check_generating_conditions(const finite_group& g, const std::vector<int>& k,
                                             const std::vector<int>& gens_for_aut);

// The graph on the elements of g with an edge {x, xh} for every h in the
// inverse-closed set h_set. Vertices carry the group's element labels.
graph cayley_graph(const finite_group& g, const std::vector<int>& h_set);

// The 27-vertex, 4-regular half-transitive graph: Cayley graph of the
// modular-27 group on {a, c, a^-1, c^-1} with c = b a^-1.
graph doyle_graph();

}  // namespace gsym
