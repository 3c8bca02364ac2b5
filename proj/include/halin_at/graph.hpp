#ifndef HALIN_AT_GRAPH_HPP
#define HALIN_AT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halin_at {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second
using Arc = std::pair<Vertex, Vertex>;   // tail, head

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
/// Edge order is the insertion order and defines edge indices.
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int n, const std::vector<Edge>& edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        std::set<Edge> seen;
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("Graph: loop edge");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            Edge e{std::min(u, v), std::max(u, v)};
            if (!seen.insert(e).second)
                throw std::invalid_argument("Graph: duplicate edge");
            edges_.push_back(e);
        }
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const {
        Edge e{std::min(u, v), std::max(u, v)};
        return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
    }

    std::vector<std::vector<Vertex>> adjacency() const {
        std::vector<std::vector<Vertex>> adj(n_);
        for (auto [u, v] : edges_) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(n_, 0);
        for (auto [u, v] : edges_) {
            ++deg[u];
            ++deg[v];
        }
        return deg;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        std::set<Edge> ea(a.edges_.begin(), a.edges_.end());
        std::set<Edge> eb(b.edges_.begin(), b.edges_.end());
        return ea == eb;
    }

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Directed graph on vertices 0..n-1. Antiparallel arc pairs are allowed,
/// loops and duplicate arcs are not. Arc order defines arc indices.
class Digraph {
public:
    Digraph() : n_(0) {}

    Digraph(int n, const std::vector<Arc>& arcs) : n_(n) {
        if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
        std::set<Arc> seen;
        arcs_.reserve(arcs.size());
        for (auto [u, v] : arcs) {
            if (u == v) throw std::invalid_argument("Digraph: loop arc");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Digraph: arc endpoint out of range");
            if (!seen.insert({u, v}).second)
                throw std::invalid_argument("Digraph: duplicate arc");
            arcs_.push_back({u, v});
        }
    }

    int num_vertices() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(Vertex u, Vertex v) const {
        return std::find(arcs_.begin(), arcs_.end(), Arc{u, v}) != arcs_.end();
    }

    std::vector<std::vector<Vertex>> out_adjacency() const {
        std::vector<std::vector<Vertex>> adj(n_);
        for (auto [u, v] : arcs_) adj[u].push_back(v);
        return adj;
    }

    std::vector<int> out_degrees() const {
        std::vector<int> deg(n_, 0);
        for (auto& a : arcs_) ++deg[a.first];
        return deg;
    }

    Digraph reversed() const {
        std::vector<Arc> rev;
        rev.reserve(arcs_.size());
        for (auto [u, v] : arcs_) rev.push_back({v, u});
        return Digraph(n_, rev);
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        if (a.n_ != b.n_) return false;
        std::set<Arc> sa(a.arcs_.begin(), a.arcs_.end());
        std::set<Arc> sb(b.arcs_.begin(), b.arcs_.end());
        return sa == sb;
    }

private:
    int n_;
    std::vector<Arc> arcs_;
};

inline int out_degree(const Digraph& d, Vertex v) {
    if (v < 0 || v >= d.num_vertices())
        throw std::out_of_range("out_degree: vertex out of range");
    int c = 0;
    for (auto& a : d.arcs())
        if (a.first == v) ++c;
    return c;
}

inline int max_out_degree(const Digraph& d) {
    auto deg = d.out_degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

/// True iff the arcs of D are in bijection with the edges of G,
/// one direction per edge.
inline bool is_orientation_of(const Digraph& d, const Graph& g) {
    if (d.num_vertices() != g.num_vertices()) return false;
    if (d.num_arcs() != g.num_edges()) return false;
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    std::set<Edge> covered;
    for (auto [u, v] : d.arcs()) {
        Edge e{std::min(u, v), std::max(u, v)};
        if (!edges.count(e)) return false;
        if (!covered.insert(e).second) return false;  // both directions present
    }
    return covered.size() == edges.size();
}

/// Forgets arc directions. Rejects antiparallel pairs.
inline Graph underlying_graph(const Digraph& d) {
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (auto [u, v] : d.arcs()) {
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw std::invalid_argument("underlying_graph: antiparallel arc pair, not an orientation");
        edges.push_back(e);
    }
    return Graph(d.num_vertices(), edges);
}

/// A digraph that is known to orient a specific underlying graph.
class Orientation {
public:
    Orientation(Digraph d, Graph g) : digraph_(std::move(d)), graph_(std::move(g)) {
        if (!is_orientation_of(digraph_, graph_))
            throw std::invalid_argument("Orientation: digraph does not orient the graph");
    }

    /// Infers the underlying graph from the digraph.
    explicit Orientation(Digraph d) : digraph_(std::move(d)), graph_(underlying_graph(digraph_)) {}

    const Digraph& digraph() const { return digraph_; }
    const Graph& graph() const { return graph_; }

    Orientation reversed() const { return Orientation(digraph_.reversed(), graph_); }

private:
    Digraph digraph_;
    Graph graph_;
};

}  // namespace halin_at

#endif
