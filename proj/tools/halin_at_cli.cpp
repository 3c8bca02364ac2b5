// Command-line front end: generate Halin graphs, tally Eulerian subdigraphs,
// compute and construct Alon-Tarsi numbers, verify certificates, export DOT.
// JSON on stdin/stdout so subcommands compose in pipelines.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "halin_at/atnum.hpp"
#include "halin_at/eulerian.hpp"
#include "halin_at/graph.hpp"
#include "halin_at/halin.hpp"
#include "halin_at/json_io.hpp"
#include "halin_at/orient.hpp"

namespace {

using halin_at::json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

halin_at::Graph graph_from_any(const json& j) {
    if (j.contains("tree")) return halin_at::halin_from_json(j).graph();
    return halin_at::graph_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alon-Tarsi orientations and numbers for Halin graphs"};
    app.require_subcommand(1);
    std::string input, output;
    app.add_option("-i,--input", input, "input file (default: stdin)");
    app.add_option("-o,--output", output, "output file (default: stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a Halin graph as JSON");
    gen->require_subcommand(1);
    int gen_outer = 0;
    auto* gen_wheel = gen->add_subcommand("wheel", "wheel with the given rim size");
    gen_wheel->add_option("--outer", gen_outer, "number of outer vertices")->required();
    int gen_leaves = 0;
    std::uint64_t gen_seed = 0;
    auto* gen_random = gen->add_subcommand("random", "seeded random Halin graph");
    gen_random->add_option("--leaves", gen_leaves, "number of leaves")->required();
    gen_random->add_option("--seed", gen_seed, "random seed")->required();

    // corpus
    auto* corpus = app.add_subcommand("corpus", "all Halin graphs up to a vertex count, one JSON per line");
    int corpus_max_n = 0, corpus_cap = halin_at::kDefaultEnumerateCap;
    corpus->add_option("--max-n", corpus_max_n, "maximum vertex count")->required();
    corpus->add_option("--cap", corpus_cap, "enumeration cap");

    // tally
    auto* tally = app.add_subcommand("tally", "Eulerian tally of a Digraph JSON");
    int arc_cap = halin_at::kDefaultTallyArcCap;
    tally->add_option("--arc-cap", arc_cap, "max arcs for subset enumeration");

    // at
    auto* at = app.add_subcommand("at", "Alon-Tarsi number of a graph");
    bool at_exact = false, at_construct = false;
    int at_verify_lower = -1;
    int at_edge_cap = halin_at::kDefaultSearchEdgeCap;
    int at_arc_cap = halin_at::kDefaultTallyArcCap;
    at->add_flag("--exact", at_exact, "exhaustive orientation search");
    at->add_flag("--construct", at_construct, "closed form plus constructed certificate (Halin input)");
    at->add_option("--verify-lower", at_verify_lower,
                   "check that no AT-orientation has max outdegree <= this value");
    at->add_option("--edge-cap", at_edge_cap, "max edges for exhaustive search");
    at->add_option("--arc-cap", at_arc_cap, "max arcs for tallying");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check an AtCertificate JSON");
    int verify_arc_cap = halin_at::kDefaultTallyArcCap;
    verify->add_option("--arc-cap", verify_arc_cap, "max arcs for tallying");

    // export
    auto* exp = app.add_subcommand("export", "export a JSON object as DOT");
    bool exp_dot = false;
    exp->add_flag("--dot", exp_dot, "DOT format");

    // let -i/-o be given after the subcommand
    for (auto* sub : {gen, gen_wheel, gen_random, corpus, tally, at, verify, exp})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen_wheel->parsed()) {
            write_output(output, halin_at::to_json(halin_at::HalinGraph::wheel(gen_outer)).dump() + "\n");
        } else if (gen_random->parsed()) {
            write_output(output, halin_at::to_json(halin_at::random_halin(gen_leaves, gen_seed)).dump() + "\n");
        } else if (corpus->parsed()) {
            std::ostringstream buf;
            for (const auto& h : halin_at::enumerate_halin(corpus_max_n, corpus_cap))
                buf << halin_at::to_json(h).dump() << "\n";
            write_output(output, buf.str());
        } else if (tally->parsed()) {
            auto d = halin_at::digraph_from_json(json::parse(read_input(input)));
            write_output(output, halin_at::to_json(halin_at::tally_eulerian(d, arc_cap)).dump() + "\n");
        } else if (at->parsed()) {
            if (static_cast<int>(at_exact) + static_cast<int>(at_construct) +
                    static_cast<int>(at_verify_lower >= 0) != 1) {
                std::cerr << "error: at requires exactly one of --exact, --construct, --verify-lower\n";
                return 2;
            }
            json j = json::parse(read_input(input));
            if (at_construct) {
                auto h = halin_at::halin_from_json(j);
                auto cert = halin_at::construct_at_orientation(h, at_arc_cap);
                json out = halin_at::to_json(cert);
                out["value"] = halin_at::halin_at_number(h);
                write_output(output, out.dump() + "\n");
            } else if (at_exact) {
                auto result = halin_at::at_number_exact(graph_from_any(j), at_edge_cap);
                json out{{"value", result.value},
                         {"lower_bound_reason", result.lower_bound_reason},
                         {"witness", result.witness ? halin_at::to_json(*result.witness) : json(nullptr)}};
                write_output(output, out.dump() + "\n");
            } else {
                bool none = halin_at::verify_no_at_orientation(graph_from_any(j), at_verify_lower,
                                                               at_edge_cap);
                json out{{"max_outdeg", at_verify_lower}, {"no_at_orientation", none}};
                write_output(output, out.dump() + "\n");
            }
        } else if (verify->parsed()) {
            json j = json::parse(read_input(input));
            bool ok = false;
            try {
                ok = halin_at::verify_certificate_json(j, verify_arc_cap);
            } catch (const halin_at::CapExceeded&) {
                throw;
            } catch (const std::exception& e) {
                std::cerr << "error: malformed certificate: " << e.what() << "\n";
                return 1;
            }
            write_output(output, json{{"valid", ok}}.dump() + "\n");
            if (!ok) {
                std::cerr << "error: certificate verification failed\n";
                return 1;
            }
        } else if (exp->parsed()) {
            if (!exp_dot) {
                std::cerr << "error: export requires --dot\n";
                return 2;
            }
            json j = json::parse(read_input(input));
            if (j.contains("tree")) {
                write_output(output, halin_at::to_dot(halin_at::halin_from_json(j)));
            } else if (j.contains("arcs")) {
                write_output(output, halin_at::to_dot(halin_at::digraph_from_json(j)));
            } else {
                write_output(output, halin_at::to_dot(halin_at::graph_from_json(j)));
            }
        }
    } catch (const halin_at::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
