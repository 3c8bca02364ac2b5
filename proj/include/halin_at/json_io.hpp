#ifndef HALIN_AT_JSON_IO_HPP
#define HALIN_AT_JSON_IO_HPP

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "halin_at/eulerian.hpp"
#include "halin_at/graph.hpp"
#include "halin_at/halin.hpp"
#include "halin_at/orient.hpp"

namespace halin_at {

using json = nlohmann::json;

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.num_vertices()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return Graph(j.at("n").get<int>(), edges);
}

inline json to_json(const Digraph& d) {
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
    return json{{"n", d.num_vertices()}, {"arcs", arcs}};
}

inline Digraph digraph_from_json(const json& j) {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs"))
        arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return Digraph(j.at("n").get<int>(), arcs);
}

inline json to_json(const EulerianTally& t) {
    return json{{"even", t.even}, {"odd", t.odd}, {"diff", t.diff()}};
}

inline json to_json(const HalinGraph& h) {
    json children = json::object();
    const PlaneTree& t = h.tree();
    for (Vertex v = 0; v < t.num_vertices(); ++v)
        if (!t.children[v].empty()) children[std::to_string(v)] = t.children[v];
    json outer = json::array();
    for (Vertex v : h.outer_cycle()) outer.push_back(v);
    return json{{"tree", {{"root", t.root}, {"children", children}}}, {"outer", outer}};
}

inline HalinGraph halin_from_json(const json& j) {
    const json& jt = j.at("tree");
    Vertex root = jt.at("root").get<int>();
    int n = root + 1;
    for (auto& [key, kids] : jt.at("children").items()) {
        n = std::max(n, std::stoi(key) + 1);
        for (const auto& c : kids) n = std::max(n, c.get<int>() + 1);
    }
    PlaneTree t;
    t.root = root;
    t.children.assign(n, {});
    for (auto& [key, kids] : jt.at("children").items())
        for (const auto& c : kids) t.children[std::stoi(key)].push_back(c.get<int>());
    std::vector<Vertex> outer;
    for (const auto& v : j.at("outer")) outer.push_back(v.get<int>());
    if (t.leaves_in_embedding_order() != outer)
        throw std::invalid_argument("halin_from_json: outer list does not match the leaves in embedding order");
    return HalinGraph::build(t);
}

inline json to_json(const AtCertificate& c) {
    json arcs = json::array();
    for (auto [u, v] : c.orientation.digraph().arcs()) arcs.push_back({u, v});
    return json{{"construction", c.construction},
                {"arcs", arcs},
                {"max_outdeg", c.max_outdeg},
                {"even", c.tally.even},
                {"odd", c.tally.odd}};
}

/// Re-checks a certificate from its JSON form: re-tallies the orientation,
/// recomputes the max outdegree, and compares against the stored values.
/// The vertex count is inferred from the arcs.
inline bool verify_certificate_json(const json& j, int arc_cap = kDefaultTallyArcCap) {
    std::vector<Arc> arcs;
    int n = 1;
    for (const auto& a : j.at("arcs")) {
        int u = a.at(0).get<int>(), v = a.at(1).get<int>();
        arcs.push_back({u, v});
        n = std::max({n, u + 1, v + 1});
    }
    Digraph d(n, arcs);
    underlying_graph(d);  // throws if not an orientation
    EulerianTally t = tally_eulerian(d, arc_cap);
    return t.even == j.at("even").get<std::int64_t>() &&
           t.odd == j.at("odd").get<std::int64_t>() &&
           t.diff() != 0 &&
           max_out_degree(d) == j.at("max_outdeg").get<int>();
}

/// DOT with one arrowed edge per arc; inner vertices (when known) are boxes.
inline std::string to_dot(const Digraph& d, int n_outer = -1) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
        out << "  " << v;
        if (n_outer >= 0 && v >= n_outer) out << " [shape=box]";
        out << ";\n";
    }
    for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const Graph& g, int n_outer = -1) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v;
        if (n_outer >= 0 && v >= n_outer) out << " [shape=box]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const HalinGraph& h) { return to_dot(h.graph(), h.num_outer()); }

}  // namespace halin_at

#endif
