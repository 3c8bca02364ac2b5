#ifndef HALIN_AT_ORIENT_HPP
#define HALIN_AT_ORIENT_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "halin_at/eulerian.hpp"
#include "halin_at/graph.hpp"
#include "halin_at/halin.hpp"

namespace halin_at {

/// Vertex ordering in which every vertex has at most `degeneracy` neighbors
/// among its predecessors.
struct DegeneracyOrder {
    std::vector<Vertex> order;
    int degeneracy = 0;
};

/// Min-degree peeling: the vertex removed first goes last in the ordering.
/// Ties break on the lowest vertex index.
inline DegeneracyOrder degeneracy_ordering(const Graph& g) {
    int n = g.num_vertices();
    auto adj = g.adjacency();
    auto deg = g.degrees();
    std::vector<bool> removed(n, false);
    DegeneracyOrder result;
    result.order.assign(n, -1);
    for (int pos = n - 1; pos >= 0; --pos) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        result.degeneracy = std::max(result.degeneracy, deg[best]);
        result.order[pos] = best;
        removed[best] = true;
        for (Vertex w : adj[best])
            if (!removed[w]) --deg[w];
    }
    return result;
}

/// Orients each edge toward the endpoint appearing earlier in the ordering.
/// The result is acyclic with max outdegree equal to the max back-degree.
inline Orientation acyclic_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
    int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("acyclic_from_ordering: order size mismatch");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw std::invalid_argument("acyclic_from_ordering: not a permutation");
        pos[v] = i;
    }
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        if (pos[u] < pos[v]) arcs.push_back({v, u});
        else arcs.push_back({u, v});
    }
    return Orientation(Digraph(n, arcs), g);
}

/// An orientation together with verified evidence that it is Alon-Tarsi,
/// proving AT(underlying graph) <= max_outdeg + 1.
struct AtCertificate {
    Orientation orientation;
    int max_outdeg;
    EulerianTally tally;
    std::string construction;
};

/// Tallies the orientation and packages it as a certificate; throws if the
/// orientation is not Alon-Tarsi or exceeds the stated outdegree bound.
inline AtCertificate make_certificate(Orientation o, const std::string& construction,
                                      int outdeg_bound,
                                      int arc_cap = kDefaultTallyArcCap) {
    AtCertificate cert{std::move(o), 0, {}, construction};
    cert.max_outdeg = max_out_degree(cert.orientation.digraph());
    cert.tally = tally_eulerian(cert.orientation.digraph(), arc_cap);
    if (cert.tally.diff() == 0)
        throw std::logic_error("certificate verification failed: diff = 0 (" + construction + ")");
    if (cert.max_outdeg > outdeg_bound)
        throw std::logic_error("certificate verification failed: outdegree bound (" + construction + ")");
    return cert;
}

/// Rim arcs v_i -> v_{i+1} cyclically, spokes v_i -> hub. Requires a wheel
/// with an even rim; max outdegree 2, no odd directed cycle.
inline AtCertificate orient_wheel_even_rim(const HalinGraph& h) {
    if (!h.is_wheel())
        throw std::invalid_argument("orient_wheel_even_rim: not a wheel");
    int n = h.num_outer();
    if (n % 2 != 0)
        throw std::invalid_argument("orient_wheel_even_rim: odd rim");
    Vertex hub = n;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) arcs.push_back({i, hub});
    return make_certificate(Orientation(Digraph(n + 1, arcs), h.graph()), "wheel-even-rim", 2);
}

/// Layered stripping orientation: the outer sequence is oriented ascending
/// (closed into a cycle when close_cycle is set), every edge between an outer
/// vertex and the inner tree points inward, and the remaining inner forest is
/// peeled leaf layer by leaf layer, each pendant edge leaving its leaf. A
/// final single leftover edge points toward its lower-indexed endpoint.
/// Inner vertices end with outdegree <= 1, outer vertices <= 2.
inline Orientation orient_layered_stripping(const Graph& g, const std::vector<Vertex>& outer,
                                            bool close_cycle) {
    int n = g.num_vertices();
    std::vector<bool> is_outer(n, false);
    for (Vertex v : outer) is_outer[v] = true;

    std::set<Edge> pending(g.edges().begin(), g.edges().end());
    std::vector<Arc> arcs;
    auto orient = [&](Vertex from, Vertex to) {
        Edge e{std::min(from, to), std::max(from, to)};
        if (!pending.erase(e))
            throw std::invalid_argument("orient_layered_stripping: missing or reoriented edge");
        arcs.push_back({from, to});
    };

    for (std::size_t i = 0; i + 1 < outer.size(); ++i) orient(outer[i], outer[i + 1]);
    if (close_cycle) orient(outer.back(), outer.front());

    // outer -> inner edges
    std::vector<Edge> snapshot(pending.begin(), pending.end());
    for (auto [a, b] : snapshot) {
        if (is_outer[a] && is_outer[b])
            throw std::invalid_argument("orient_layered_stripping: stray edge between outer vertices");
        if (is_outer[a]) orient(a, b);
        else if (is_outer[b]) orient(b, a);
    }

    // peel the unoriented inner forest
    while (!pending.empty()) {
        if (pending.size() == 1) {
            auto [a, b] = *pending.begin();
            orient(a, b);  // a < b
            break;
        }
        std::vector<int> deg(n, 0);
        for (auto [a, b] : pending) {
            ++deg[a];
            ++deg[b];
        }
        std::vector<Edge> round(pending.begin(), pending.end());
        bool progressed = false;
        for (auto [a, b] : round) {
            bool la = deg[a] == 1, lb = deg[b] == 1;
            if (la && lb) continue;  // both-leaf edge waits for the leftover rule
            if (la) orient(a, b), progressed = true;
            else if (lb) orient(b, a), progressed = true;
        }
        if (!progressed)
            throw std::invalid_argument("orient_layered_stripping: stuck, input is not a forest remainder");
    }
    return Orientation(Digraph(n, arcs), g);
}

/// Fan orientation for odd k: rim path ascending, hub -> first rim vertex,
/// every other rim vertex -> hub. Tally is exactly ((k+1)/2, (k-1)/2).
inline AtCertificate orient_fan_odd(const Fan& f, int n_vertices) {
    int k = f.k();
    if (k % 2 == 0 || k < 1)
        throw std::invalid_argument("orient_fan_odd: k must be odd");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < k; ++i) arcs.push_back({f.rim[i], f.rim[i + 1]});
    arcs.push_back({f.hub, f.rim[0]});
    for (int j = 1; j < k; ++j) arcs.push_back({f.rim[j], f.hub});
    AtCertificate cert = make_certificate(Orientation(Digraph(n_vertices, arcs)), "fan-odd", 2);
    if (cert.tally.even != (k + 1) / 2 || cert.tally.odd != (k - 1) / 2)
        throw std::logic_error("orient_fan_odd: tally does not match the closed form");
    return cert;
}

/// Acyclic fan orientation: rim path descending, every rim vertex -> hub.
inline Orientation orient_fan_acyclic(const Fan& f, int n_vertices) {
    int k = f.k();
    if (k < 1) throw std::invalid_argument("orient_fan_acyclic: empty fan");
    std::vector<Arc> arcs;
    for (int i = 1; i < k; ++i) arcs.push_back({f.rim[i], f.rim[i - 1]});
    for (int j = 0; j < k; ++j) arcs.push_back({f.rim[j], f.hub});
    return Orientation(Digraph(n_vertices, arcs));
}

/// Remainder orientation for the even-fan split: the outer segment is
/// oriented descending toward its first vertex, and every tree edge points
/// along the unique tree path toward the segment's last vertex v_n. Every
/// directed cycle of the result contains the arc (w, v_n) where w is v_n's
/// tree neighbor.
inline Orientation orient_remainder_paths(const Graph& g2, const std::vector<Vertex>& segment) {
    if (segment.empty())
        throw std::invalid_argument("orient_remainder_paths: empty segment");
    int n = g2.num_vertices();
    Vertex sink = segment.back();  // v_n

    std::set<Edge> seg_edges;
    std::vector<Arc> arcs;
    for (std::size_t i = 1; i < segment.size(); ++i) {
        arcs.push_back({segment[i], segment[i - 1]});
        seg_edges.insert({std::min(segment[i], segment[i - 1]),
                          std::max(segment[i], segment[i - 1])});
    }

    // tree part: everything that is not a segment edge, rooted at the sink
    std::vector<std::vector<Vertex>> tadj(n);
    int tree_edge_count = 0;
    for (auto [a, b] : g2.edges()) {
        if (seg_edges.count({a, b})) continue;
        tadj[a].push_back(b);
        tadj[b].push_back(a);
        ++tree_edge_count;
    }
    std::vector<Vertex> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{sink};
    seen[sink] = true;
    int reached_edges = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : tadj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            parent[w] = v;
            arcs.push_back({w, v});
            ++reached_edges;
            stack.push_back(w);
        }
    }
    if (reached_edges != tree_edge_count)
        throw std::invalid_argument("orient_remainder_paths: tree part disconnected from v_n");
    return Orientation(Digraph(n, arcs), g2);
}

/// Union of two part orientations plus crossing arcs. Every crossing arc
/// must leave `from_side` (the vertex set of d1) and enter the other side.
inline Digraph combine(const Digraph& d1, const Digraph& d2, const std::vector<Arc>& crossing,
                       const std::vector<Vertex>& from_side) {
    if (d1.num_vertices() != d2.num_vertices())
        throw std::invalid_argument("combine: vertex-count mismatch");
    int n = d1.num_vertices();
    std::vector<bool> side1(n, false);
    for (Vertex v : from_side) {
        if (v < 0 || v >= n) throw std::invalid_argument("combine: side vertex out of range");
        side1[v] = true;
    }
    for (auto [u, v] : d1.arcs())
        if (!side1[u] || !side1[v])
            throw std::invalid_argument("combine: d1 arc leaves its side");
    for (auto [u, v] : d2.arcs())
        if (side1[u] || side1[v])
            throw std::invalid_argument("combine: d2 arc touches the from side");
    std::vector<Arc> arcs = d1.arcs();
    arcs.insert(arcs.end(), d2.arcs().begin(), d2.arcs().end());
    for (auto [u, v] : crossing) {
        if (!side1[u] || side1[v])
            throw std::invalid_argument("combine: crossing arc in the wrong direction");
        arcs.push_back({u, v});
    }
    return Digraph(n, arcs);
}

namespace detail {

// Among candidate fans, the one whose rim starts at the smallest outer index.
inline const Fan* pick_fan(const std::vector<Fan>& fans) {
    const Fan* best = nullptr;
    for (const auto& f : fans)
        if (!best || f.rim.front() < best->rim.front()) best = &f;
    return best;
}

}  // namespace detail

/// Constructs an AT-orientation of a Halin graph, dispatching on structure:
/// even-order wheels get the degeneracy bound (max outdegree <= 3), everything
/// else gets a max outdegree <= 2 construction. The certificate tally is
/// re-verified before returning.
inline AtCertificate construct_at_orientation(const HalinGraph& h,
                                              int arc_cap = kDefaultTallyArcCap) {
    int n = h.num_outer();
    int nv = h.num_vertices();

    if (h.is_wheel()) {
        if (n % 2 == 0) return orient_wheel_even_rim(h);
        // even total order: AT(H) = 4, certify the degeneracy upper bound
        auto ord = degeneracy_ordering(h.graph());
        return make_certificate(acyclic_from_ordering(h.graph(), ord.order),
                                "degeneracy-acyclic", ord.degeneracy, arc_cap);
    }

    if (n % 2 == 0) {
        auto o = orient_layered_stripping(h.graph(), h.outer_cycle(), true);
        return make_certificate(std::move(o), "layered-stripping", 2, arc_cap);
    }

    // odd outer cycle, not a wheel: split at a special vertex's fan
    std::vector<Fan> odd_fans, even_fans;
    for (Vertex u : special_inner_vertices(h)) {
        Fan f = fan_of(h, u);
        (f.k() % 2 == 1 ? odd_fans : even_fans).push_back(f);
    }

    if (!odd_fans.empty()) {
        const Fan& f = *detail::pick_fan(odd_fans);
        FanSplit s = split_at_fan(h, f);
        AtCertificate d1 = orient_fan_odd(f, nv);
        std::vector<Vertex> segment;
        for (Vertex v = s.after_rim; ; v = (v + 1) % n) {
            segment.push_back(v);
            if (v == s.before_rim) break;
        }
        Orientation d2 = orient_layered_stripping(s.remainder, segment, false);
        std::vector<Vertex> fan_side = f.rim;
        fan_side.push_back(f.hub);
        std::vector<Arc> crossing{{f.hub, s.hub_inner_neighbor},
                                  {f.rim.front(), s.before_rim},
                                  {f.rim.back(), s.after_rim}};
        Digraph d = combine(d1.orientation.digraph(), d2.digraph(), crossing, fan_side);
        return make_certificate(Orientation(std::move(d), h.graph()), "fan-odd-split", 2, arc_cap);
    }

    const Fan& f = *detail::pick_fan(even_fans);
    FanSplit s = split_at_fan(h, f);
    Orientation d1 = orient_fan_acyclic(f, nv);
    std::vector<Vertex> segment;
    for (Vertex v = s.after_rim; ; v = (v + 1) % n) {
        segment.push_back(v);
        if (v == s.before_rim) break;
    }
    Orientation d2 = orient_remainder_paths(s.remainder, segment);
    std::vector<Vertex> rem_side;
    std::vector<bool> in_fan(nv, false);
    in_fan[f.hub] = true;
    for (Vertex v : f.rim) in_fan[v] = true;
    for (Vertex v = 0; v < nv; ++v)
        if (!in_fan[v]) rem_side.push_back(v);
    std::vector<Arc> crossing{{s.hub_inner_neighbor, f.hub},
                              {s.before_rim, f.rim.front()},
                              {s.after_rim, f.rim.back()}};
    Digraph d = combine(d2.digraph(), d1.digraph(), crossing, rem_side);
    return make_certificate(Orientation(std::move(d), h.graph()), "fan-even-split", 2, arc_cap);
}

}  // namespace halin_at

#endif
