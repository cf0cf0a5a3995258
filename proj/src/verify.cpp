#include "gsym/verify.hpp"

#include <exception>
#include <functional>
#include <sstream>

namespace gsym {

namespace {

void run_stage(verify_result& out, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
    verify_stage stage;
    stage.name = name;
    try {
        auto [ok, detail] = body();
        stage.passed = ok;
        stage.detail = detail;
    } catch (const std::exception& e) {
        stage.passed = false;
        stage.detail = e.what();
    }
    out.stages.push_back(std::move(stage));
}

}  // namespace

bool verify_result::all_passed() const {
    for (const auto& s : stages)
        if (!s.passed) return false;
    return true;
}

nlohmann::json verify_result::to_json() const {
    nlohmann::json j;
    j["stages"] = nlohmann::json::array();
    for (const auto& s : stages)
        j["stages"].push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    j["all_passed"] = all_passed();
    j["report"] = report ? report->to_json() : nlohmann::json();
    j["certificate"] = certificate ? certificate->to_json() : nlohmann::json();
    return j;
}

verify_result verify_doyle(const graph& candidate) {
    verify_result out;

    run_stage(out, "group self-check", [] {
        finite_group g = finite_group::make_modular27();  // throws if the table is broken
        int a = g.named('a'), c = g.named('c');
        int e = g.identity();
        bool ok = g.element_order(a) == 9 && g.element_order(c) == 9 &&
                  g.mul(g.mul(g.mul(c, c), c), g.mul(g.mul(a, a), a)) == e &&
                  g.mul(g.mul(g.inv(c), a), c) == g.mul(g.mul(g.mul(a, a), a), a) &&
                  g.mul(g.mul(g.inv(a), c), a) == g.mul(g.mul(g.mul(c, c), c), c);
        return std::make_pair(ok, std::string("order 27, both presentations hold"));
    });

    run_stage(out, "connection-set conditions", [] {
        finite_group g = finite_group::make_modular27();
        condition_report r = check_generating_conditions(
            g, {g.named('a'), g.named('c')}, {g.named('a'), g.named('b')});
        std::ostringstream detail;
        detail << "cond1=" << r.cond1 << " cond2=" << r.cond2 << " cond3=" << r.cond3
               << " generates=" << r.generates;
        return std::make_pair(r.all_pass(), detail.str());
    });

    run_stage(out, "graph shape", [&candidate] {
        bool ok = candidate.vertex_count() == 27 && candidate.edge_count() == 54 &&
                  candidate.regular_degree() == std::optional<int>(4) &&
                  diameter(candidate).has_value();
        std::ostringstream detail;
        detail << candidate.vertex_count() << " vertices, " << candidate.edge_count()
               << " edges";
        return std::make_pair(ok, detail.str());
    });

    run_stage(out, "classification", [&candidate, &out] {
        symmetry_report r = classify(candidate);
        out.report = r;
        bool ok = r.classification == "half-transitive" && r.aut_order == 54 &&
                  r.vertex_orbit_count == 1 && r.edge_orbit_count == 1 &&
                  r.arc_orbit_count == 2;
        std::ostringstream detail;
        detail << r.classification << ", |Aut|=" << r.aut_order;
        return std::make_pair(ok, detail.str());
    });

    run_stage(out, "local obstruction", [&candidate, &out] {
        finite_group g = finite_group::make_modular27();
        int a = g.named('a');
        obstruction_certificate cert =
            verify_non_arc_transitive_locally(candidate, g.identity(), a, g.inv(a), 2);
        out.certificate = cert;
        bool ok = cert.ball_size == 17 && !cert.reversal_found && cert.conclusion;
        std::ostringstream detail;
        detail << "ball_size=" << cert.ball_size << " reversal_found=" << cert.reversal_found
               << " conclusion=" << cert.conclusion;
        return std::make_pair(ok, detail.str());
    });

    return out;
}

}  // namespace gsym
