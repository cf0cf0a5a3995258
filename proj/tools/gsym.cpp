#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsym/analysis.hpp"
#include "gsym/cayley.hpp"
#include "gsym/graph.hpp"
#include "gsym/symmetry.hpp"
#include "gsym/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void emit_graph(const gsym::graph& g, const std::string& format) {
    if (format == "graph6")
        std::cout << gsym::to_graph6(g) << "\n";
    else if (format == "dot")
        std::cout << gsym::to_dot(g);
    else
        std::cout << gsym::to_edgelist(g);
}

void print_report_table(const gsym::symmetry_report& r) {
    std::cout << "n=" << r.n << " edges=" << r.edge_count << " degree=";
    if (r.regular_degree)
        std::cout << *r.regular_degree;
    else
        std::cout << "irregular";
    std::cout << " aut_order=" << r.aut_order << " orbits(v/e/a)=" << r.vertex_orbit_count
              << "/" << r.edge_orbit_count << "/" << r.arc_orbit_count
              << " girth=" << (r.girth ? std::to_string(*r.girth) : "acyclic")
              << " diameter=" << (r.diameter ? std::to_string(*r.diameter) : "disconnected")
              << " classification=" << r.classification << "\n";
}

int cmd_analyze(const std::string& input, bool json) {
    std::vector<std::string> lines = split_lines(read_all(input));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        gsym::graph g;
        try {
            g = gsym::from_graph6(lines[i]);
        } catch (const gsym::parse_error& e) {
            std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
            return exit_usage;
        }
        gsym::symmetry_report r = gsym::classify(g);
        if (json)
            std::cout << r.to_json().dump() << "\n";
        else
            print_report_table(r);
    }
    return exit_ok;
}

int cmd_verify(bool json, const std::string& graph_input) {
    gsym::graph candidate;
    if (graph_input.empty()) {
        candidate = gsym::doyle_graph();
    } else {
        std::vector<std::string> lines = split_lines(read_all(graph_input));
        if (lines.empty() || lines[0].empty()) {
            std::cerr << "no graph6 line in input\n";
            return exit_usage;
        }
        try {
            candidate = gsym::from_graph6(lines[0]);
        } catch (const gsym::parse_error& e) {
            std::cerr << "line 1: " << e.what() << "\n";
            return exit_usage;
        }
    }

    gsym::verify_result result = gsym::verify_doyle(candidate);
    if (json) {
        std::cout << result.to_json().dump(2) << "\n";
    } else {
        for (const auto& s : result.stages)
            std::cout << (s.passed ? "pass" : "FAIL") << "  " << s.name << ": " << s.detail
                      << "\n";
    }
    if (!result.all_passed()) {
        for (const auto& s : result.stages)
            if (!s.passed) {
                std::cerr << "verification failed at stage: " << s.name << "\n";
                break;
            }
        return exit_verify_failed;
    }
    return exit_ok;
}

int cmd_ball(const std::string& input, int center, int radius, const std::string& format) {
    std::vector<std::string> lines = split_lines(read_all(input));
    if (lines.empty() || lines[0].empty()) {
        std::cerr << "no graph6 line in input\n";
        return exit_usage;
    }
    gsym::graph g;
    try {
        g = gsym::from_graph6(lines[0]);
    } catch (const gsym::parse_error& e) {
        std::cerr << "line 1: " << e.what() << "\n";
        return exit_usage;
    }
    if (center < 0 || center >= g.vertex_count()) {
        std::cerr << "center " << center << " out of range for " << g.vertex_count()
                  << " vertices\n";
        return exit_usage;
    }
    gsym::ball_subgraph ball = gsym::make_ball(g, center, radius);
    emit_graph(ball.induced, format);
    for (std::size_t i = 0; i < ball.vertex_map.size(); ++i)
        std::cerr << i << " -> " << ball.vertex_map[i] << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graphs, automorphism groups, and symmetry classification"};
    app.require_subcommand(1);

    std::string format = "graph6";
    bool json = false;
    std::string input = "-";
    std::string verify_graph;
    int center = 0;
    int radius = 2;

    auto format_opt = CLI::IsMember({"graph6", "dot", "edgelist"});

    CLI::App* doyle = app.add_subcommand("doyle", "emit the 27-vertex half-transitive graph");
    doyle->add_option("--format", format, "output format")->check(format_opt);

    CLI::App* analyze = app.add_subcommand("analyze", "classify graph6 graphs, one per line");
    analyze->add_option("input", input, "input path or - for stdin");
    analyze->add_flag("--json", json, "newline-delimited JSON reports");

    CLI::App* verify =
        app.add_subcommand("verify-doyle", "run the full half-transitivity verification");
    verify->add_flag("--json", json, "emit the certificate as JSON");
    verify->add_option("--graph", verify_graph,
                       "verify a candidate graph6 graph (path or -) instead of the built-in");

    CLI::App* ball = app.add_subcommand("ball", "induced ball subgraph around a vertex");
    ball->add_option("input", input, "input path or - for stdin");
    ball->add_option("--center", center, "center vertex");
    ball->add_option("--radius", radius, "ball radius");
    ball->add_option("--format", format, "output format")->check(format_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (doyle->parsed()) {
            emit_graph(gsym::doyle_graph(), format);
            return exit_ok;
        }
        if (analyze->parsed()) return cmd_analyze(input, json);
        if (verify->parsed()) return cmd_verify(json, verify_graph);
        if (ball->parsed()) return cmd_ball(input, center, radius, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
