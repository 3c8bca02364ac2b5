#ifndef HALIN_AT_ATNUM_HPP
#define HALIN_AT_ATNUM_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "halin_at/eulerian.hpp"
#include "halin_at/graph.hpp"
#include "halin_at/halin.hpp"
#include "halin_at/orient.hpp"

namespace halin_at {

inline constexpr int kDefaultSearchEdgeCap = 20;
inline constexpr int kDefaultChromaticVertexCap = 16;

/// Exact Alon-Tarsi number with a verifying witness for the upper bound and
/// a tag recording how the lower bound was established.
struct AtResult {
    int value;
    std::optional<AtCertificate> witness;  // absent only for the edgeless graph
    std::string lower_bound_reason;        // "chromatic" | "exhaustive-no-orientation"
};

namespace detail {

// Greedy clique from each start vertex; a cheap chromatic lower bound.
inline int greedy_clique_bound(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return 0;
    auto adj = g.adjacency();
    std::vector<std::vector<bool>> am(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) am[u][v] = am[v][u] = true;
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
    int best = 1;
    for (Vertex s : by_degree) {
        std::vector<Vertex> clique{s};
        for (Vertex v : by_degree) {
            if (v == s) continue;
            bool ok = true;
            for (Vertex c : clique)
                if (!am[v][c]) { ok = false; break; }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

// Backtracking over edges with per-vertex outdegree budgets; visits every
// complete orientation until the visitor returns true.
struct OrientationSearch {
    const std::vector<Edge>* edges;
    int n;
    std::vector<int> budget;
    std::vector<Arc> chosen;

    template <typename Visit>
    bool run(std::size_t i, Visit&& visit) {
        if (i == edges->size()) return visit(Digraph(n, chosen));
        auto [u, v] = (*edges)[i];
        if (budget[u] > 0) {
            --budget[u];
            chosen.push_back({u, v});
            bool hit = run(i + 1, visit);
            chosen.pop_back();
            ++budget[u];
            if (hit) return true;
        }
        if (budget[v] > 0) {
            --budget[v];
            chosen.push_back({v, u});
            bool hit = run(i + 1, visit);
            chosen.pop_back();
            ++budget[v];
            if (hit) return true;
        }
        return false;
    }
};

// First AT-orientation of g with max outdegree <= max_outdeg, if any.
inline std::optional<Digraph> find_at_orientation(const Graph& g, int max_outdeg) {
    OrientationSearch search;
    search.edges = &g.edges();
    search.n = g.num_vertices();
    search.budget.assign(g.num_vertices(), max_outdeg);
    std::optional<Digraph> found;
    search.run(0, [&](const Digraph& d) {
        // acyclic orientations are AT without tallying
        if (is_acyclic(d) || is_alon_tarsi(d)) {
            found = d;
            return true;
        }
        return false;
    });
    return found;
}

}  // namespace detail

/// True iff no orientation of g with max outdegree <= max_outdeg is
/// Alon-Tarsi; exhaustive over all orientations within the budget.
inline bool verify_no_at_orientation(const Graph& g, int max_outdeg,
                                     int edge_cap = kDefaultSearchEdgeCap) {
    if (g.num_edges() > edge_cap)
        throw CapExceeded("verify_no_at_orientation: edge count exceeds cap");
    return !detail::find_at_orientation(g, max_outdeg).has_value();
}

/// Exact AT(G) by ascending exhaustive orientation search. The lower bound is
/// the clique bound when the first k tried succeeds, otherwise exhaustive.
inline AtResult at_number_exact(const Graph& g, int edge_cap = kDefaultSearchEdgeCap) {
    if (g.num_edges() > edge_cap)
        throw CapExceeded("at_number_exact: edge count exceeds cap");
    if (g.num_edges() == 0)
        return AtResult{1, std::nullopt, "chromatic"};
    int start = std::max(2, detail::greedy_clique_bound(g));
    for (int k = start;; ++k) {
        auto found = detail::find_at_orientation(g, k - 1);
        if (found) {
            AtCertificate cert = make_certificate(Orientation(std::move(*found), g),
                                                  "exhaustive-search", k - 1);
            return AtResult{k, std::move(cert),
                            k == start ? "chromatic" : "exhaustive-no-orientation"};
        }
    }
}

namespace detail {

inline bool k_colorable(const Graph& g, int k) {
    int n = g.num_vertices();
    auto adj = g.adjacency();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
    std::vector<int> color(n, -1);
    // colors are interchangeable: never open more than one fresh color
    std::function<bool(int, int)> go = [&](int idx, int used) {
        if (idx == n) return true;
        Vertex v = order[idx];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (Vertex w : adj[v])
                if (color[w] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (go(idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace detail

/// Exact chromatic number by iterated k-colorability backtracking starting
/// at a greedy clique lower bound.
inline int chromatic_number(const Graph& g, int vertex_cap = kDefaultChromaticVertexCap) {
    if (g.num_vertices() > vertex_cap)
        throw CapExceeded("chromatic_number: vertex count exceeds cap");
    if (g.num_vertices() == 0) return 0;
    if (g.num_edges() == 0) return 1;
    for (int k = detail::greedy_clique_bound(g);; ++k)
        if (detail::k_colorable(g, k)) return k;
}

/// AT(G) <= degeneracy(G) + 1.
inline int at_upper_bound_degeneracy(const Graph& g) {
    return degeneracy_ordering(g).degeneracy + 1;
}

/// Closed form: 4 for an even-order wheel, 3 otherwise.
inline int halin_at_number(const HalinGraph& h) {
    return (h.is_wheel() && h.num_vertices() % 2 == 0) ? 4 : 3;
}

}  // namespace halin_at

#endif
