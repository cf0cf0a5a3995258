#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsym/analysis.hpp"
#include "gsym/cayley.hpp"
#include "gsym/graph.hpp"
#include "gsym/symmetry.hpp"

#include "json.hpp"

namespace gsym {

struct verify_stage {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Full half-transitivity verification: group self-checks, connection-set
// conditions for K = {a, c}, classification, and the radius-2 local
// obstruction at the arc (identity, a).
struct verify_result {
    std::vector<verify_stage> stages;
    std::optional<symmetry_report> report;
    std::optional<obstruction_certificate> certificate;

    bool all_passed() const;
    nlohmann::json to_json() const;
};

// Runs the verification stages against `candidate`, which is expected to be
// the 27-vertex graph in its canonical vertex order.
verify_result verify_doyle(const graph& candidate);

inline verify_result verify_doyle() { return verify_doyle(doyle_graph()); }

}  // namespace gsym
