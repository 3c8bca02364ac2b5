#ifndef HALIN_AT_HALIN_HPP
#define HALIN_AT_HALIN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "halin_at/graph.hpp"

namespace halin_at {

/// Rooted tree with ordered child lists; the child order encodes the planar
/// embedding. Vertices are 0..n-1.
struct PlaneTree {
    Vertex root = 0;
    std::vector<std::vector<Vertex>> children;

    int num_vertices() const { return static_cast<int>(children.size()); }

    int tree_degree(Vertex v) const {
        int d = static_cast<int>(children[v].size());
        if (v != root) ++d;
        return d;
    }

    /// Checks shape: every non-root vertex has exactly one parent and all
    /// vertices are reachable from the root.
    void validate() const {
        int n = num_vertices();
        if (n == 0) throw std::invalid_argument("PlaneTree: empty");
        if (root < 0 || root >= n) throw std::invalid_argument("PlaneTree: bad root");
        std::vector<int> parent_count(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex c : children[v]) {
                if (c < 0 || c >= n) throw std::invalid_argument("PlaneTree: child out of range");
                ++parent_count[c];
            }
        if (parent_count[root] != 0) throw std::invalid_argument("PlaneTree: root has a parent");
        for (Vertex v = 0; v < n; ++v)
            if (v != root && parent_count[v] != 1)
                throw std::invalid_argument("PlaneTree: not a tree");
        // reachability
        std::vector<bool> seen(n, false);
        std::vector<Vertex> stack{root};
        seen[root] = true;
        int count = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex c : children[v]) {
                if (!seen[c]) {
                    seen[c] = true;
                    ++count;
                    stack.push_back(c);
                }
            }
        }
        if (count != n) throw std::invalid_argument("PlaneTree: disconnected");
    }

    /// Leaves (tree degree 1) in DFS left-to-right order from the root.
    std::vector<Vertex> leaves_in_embedding_order() const {
        std::vector<Vertex> leaves;
        std::function<void(Vertex)> dfs = [&](Vertex v) {
            if (tree_degree(v) <= 1) leaves.push_back(v);
            for (Vertex c : children[v]) dfs(c);
        };
        dfs(root);
        return leaves;
    }
};

/// Halin graph: plane tree union the cycle through its leaves in embedding
/// order. Vertices are relabeled on construction so that the outer cycle is
/// 0..n_outer-1 in cyclic order and inner vertices follow in DFS order.
class HalinGraph {
public:
    /// Builds from a plane tree; throws on a degree-2 tree vertex or < 3 leaves.
    static HalinGraph build(const PlaneTree& tree) {
        tree.validate();
        int nt = tree.num_vertices();
        for (Vertex v = 0; v < nt; ++v)
            if (tree.tree_degree(v) == 2)
                throw std::invalid_argument("HalinGraph: tree has a degree-2 vertex");
        auto leaves = tree.leaves_in_embedding_order();
        int n_outer = static_cast<int>(leaves.size());
        if (n_outer < 3)
            throw std::invalid_argument("HalinGraph: fewer than 3 leaves");

        // relabel: leaves -> 0..n_outer-1 in embedding order, inner vertices
        // follow in DFS preorder
        std::vector<Vertex> relabel(nt, -1);
        for (int i = 0; i < n_outer; ++i) relabel[leaves[i]] = i;
        int next_inner = n_outer;
        std::function<void(Vertex)> assign = [&](Vertex v) {
            if (relabel[v] < 0) relabel[v] = next_inner++;
            for (Vertex c : tree.children[v]) assign(c);
        };
        assign(tree.root);

        HalinGraph h;
        h.n_outer_ = n_outer;
        h.tree_.root = relabel[tree.root];
        h.tree_.children.assign(nt, {});
        for (Vertex v = 0; v < nt; ++v)
            for (Vertex c : tree.children[v])
                h.tree_.children[relabel[v]].push_back(relabel[c]);

        std::vector<Edge> edges;
        for (Vertex v = 0; v < nt; ++v)
            for (Vertex c : tree.children[v])
                edges.push_back({std::min(relabel[v], relabel[c]),
                                 std::max(relabel[v], relabel[c])});
        for (int i = 0; i < n_outer; ++i) {
            int j = (i + 1) % n_outer;
            edges.push_back({std::min(i, j), std::max(i, j)});
        }
        h.graph_ = Graph(nt, edges);
        return h;
    }

    /// Hub adjacent to all rim vertices; total order n_outer + 1.
    static HalinGraph wheel(int n_outer) {
        if (n_outer < 3) throw std::invalid_argument("wheel: need at least 3 outer vertices");
        PlaneTree t;
        t.root = 0;
        t.children.assign(n_outer + 1, {});
        for (int i = 1; i <= n_outer; ++i) t.children[0].push_back(i);
        return build(t);
    }

    const PlaneTree& tree() const { return tree_; }
    const Graph& graph() const { return graph_; }
    int num_vertices() const { return graph_.num_vertices(); }
    int num_outer() const { return n_outer_; }
    int num_inner() const { return num_vertices() - n_outer_; }

    bool is_outer(Vertex v) const { return v < n_outer_; }
    bool is_wheel() const { return num_inner() == 1; }

    /// Outer cycle vertices in cyclic order; by the labeling convention this
    /// is always 0..n_outer-1.
    std::vector<Vertex> outer_cycle() const {
        std::vector<Vertex> c(n_outer_);
        for (int i = 0; i < n_outer_; ++i) c[i] = i;
        return c;
    }

    std::vector<Vertex> inner_vertices() const {
        std::vector<Vertex> inner;
        for (Vertex v = n_outer_; v < num_vertices(); ++v) inner.push_back(v);
        return inner;
    }

private:
    int n_outer_ = 0;
    PlaneTree tree_;
    Graph graph_;
};

/// A special inner vertex together with its consecutive outer neighbors, in
/// outer-cycle order starting at the rim vertex whose cyclic predecessor is
/// not in the rim.
struct Fan {
    Vertex hub;
    std::vector<Vertex> rim;
    int k() const { return static_cast<int>(rim.size()); }
};

/// Inner vertices with exactly one inner neighbor. Rejects wheels, where the
/// definition is vacuous.
inline std::vector<Vertex> special_inner_vertices(const HalinGraph& h) {
    if (h.is_wheel())
        throw std::invalid_argument("special_inner_vertices: wheel has no special inner vertices");
    auto adj = h.graph().adjacency();
    std::vector<Vertex> specials;
    for (Vertex v : h.inner_vertices()) {
        int inner_nbrs = 0;
        for (Vertex w : adj[v])
            if (!h.is_outer(w)) ++inner_nbrs;
        if (inner_nbrs == 1) specials.push_back(v);
    }
    return specials;
}

/// The fan induced by a special inner vertex and its outer neighbors.
inline Fan fan_of(const HalinGraph& h, Vertex u) {
    auto specials = special_inner_vertices(h);
    if (std::find(specials.begin(), specials.end(), u) == specials.end())
        throw std::invalid_argument("fan_of: vertex is not special");
    int n = h.num_outer();
    auto adj = h.graph().adjacency();
    std::vector<bool> in_rim(n, false);
    int k = 0;
    for (Vertex w : adj[u])
        if (h.is_outer(w)) {
            in_rim[w] = true;
            ++k;
        }
    // rim start: in rim, cyclic predecessor not in rim
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (in_rim[i] && !in_rim[(i + n - 1) % n]) {
            start = i;
            break;
        }
    if (start < 0) throw std::logic_error("fan_of: rim not a proper cyclic interval");
    Fan f;
    f.hub = u;
    for (int j = 0; j < k; ++j) {
        int p = (start + j) % n;
        if (!in_rim[p]) throw std::logic_error("fan_of: rim not consecutive");
        f.rim.push_back(p);
    }
    return f;
}

/// Split of a Halin graph at a fan: the induced fan part, the remainder, and
/// the three crossing edges {hub-v, v1-vn, vk-v(k+1)} where v is the hub's
/// unique inner neighbor. Both parts keep the original vertex labels.
struct FanSplit {
    Graph fan_part;        // edges inside {hub} + rim, on the full vertex space
    Graph remainder;       // edges of H - V(fan), on the full vertex space
    std::vector<Edge> crossing;
    Vertex hub_inner_neighbor;  // v
    Vertex before_rim;          // outer vertex just before the rim (v_n)
    Vertex after_rim;           // v_{k+1}
};

inline FanSplit split_at_fan(const HalinGraph& h, const Fan& f) {
    Fan check = fan_of(h, f.hub);
    if (check.rim != f.rim)
        throw std::invalid_argument("split_at_fan: fan does not match a special vertex of H");
    int n = h.num_outer();
    int nv = h.num_vertices();
    std::vector<bool> in_fan(nv, false);
    in_fan[f.hub] = true;
    for (Vertex v : f.rim) in_fan[v] = true;

    auto adj = h.graph().adjacency();
    Vertex v_inner = -1;
    for (Vertex w : adj[f.hub])
        if (!h.is_outer(w)) v_inner = w;
    if (v_inner < 0) throw std::logic_error("split_at_fan: special hub has no inner neighbor");

    Vertex before = (f.rim.front() + n - 1) % n;  // v_n
    Vertex after = (f.rim.back() + 1) % n;        // v_{k+1}

    std::vector<Edge> e1, e2, crossing;
    for (auto [a, b] : h.graph().edges()) {
        if (in_fan[a] && in_fan[b]) e1.push_back({a, b});
        else if (!in_fan[a] && !in_fan[b]) e2.push_back({a, b});
        else crossing.push_back({a, b});
    }
    FanSplit s;
    s.fan_part = Graph(nv, e1);
    s.remainder = Graph(nv, e2);
    s.crossing = crossing;
    s.hub_inner_neighbor = v_inner;
    s.before_rim = before;
    s.after_rim = after;
    return s;
}

inline constexpr int kDefaultEnumerateCap = 12;

namespace detail {

// Ordered-tree shapes for Halin enumeration: a node is a leaf or has >= 2
// children (>= 3 at the root), so no tree vertex has degree 2.
struct Shape {
    std::vector<Shape> kids;
    int size() const {
        int s = 1;
        for (auto& k : kids) s += k.size();
        return s;
    }
};

// All ordered subtrees with `size` vertices whose root has 0 or >= 2 children.
inline std::vector<Shape> subtree_shapes(int size, std::vector<std::vector<Shape>>& memo) {
    if (size < static_cast<int>(memo.size()) && !memo[size].empty()) return memo[size];
    std::vector<Shape> out;
    if (size == 1) {
        out.push_back(Shape{});
    } else if (size >= 3) {
        // compositions of size-1 into >= 2 parts
        std::vector<Shape> partial;
        std::function<void(int, int)> go = [&](int remaining, int parts) {
            if (remaining == 0) {
                if (parts >= 2) out.push_back(Shape{partial});
                return;
            }
            for (int first = 1; first <= remaining; ++first) {
                for (auto& sub : subtree_shapes(first, memo)) {
                    partial.push_back(sub);
                    go(remaining - first, parts + 1);
                    partial.pop_back();
                }
            }
        };
        go(size - 1, 0);
    }
    if (size < static_cast<int>(memo.size())) memo[size] = out;
    return out;
}

inline PlaneTree shape_to_tree(const Shape& s) {
    PlaneTree t;
    t.children.assign(s.size(), {});
    int next = 1;
    std::function<void(const Shape&, Vertex)> place = [&](const Shape& node, Vertex id) {
        for (auto& kid : node.kids) {
            Vertex cid = next++;
            t.children[id].push_back(cid);
            place(kid, cid);
        }
    };
    t.root = 0;
    place(s, 0);
    return t;
}

}  // namespace detail

/// Every Halin graph with at most max_vertices vertices, one representative
/// per ordered plane-tree shape (root with >= 3 subtrees, internal vertices
/// with >= 2 children). Includes all wheels in range.
inline std::vector<HalinGraph> enumerate_halin(int max_vertices,
                                               int cap = kDefaultEnumerateCap) {
    if (max_vertices > cap)
        throw std::invalid_argument("enumerate_halin: max_vertices exceeds cap");
    std::vector<HalinGraph> out;
    std::vector<std::vector<detail::Shape>> memo(max_vertices + 1);
    for (int n = 4; n <= max_vertices; ++n) {
        // root with >= 3 ordered subtrees summing to n-1 vertices
        std::vector<detail::Shape> partial;
        std::function<void(int, int)> go = [&](int remaining, int parts) {
            if (remaining == 0) {
                if (parts >= 3) {
                    detail::Shape root{partial};
                    out.push_back(HalinGraph::build(detail::shape_to_tree(root)));
                }
                return;
            }
            for (int first = 1; first <= remaining; ++first) {
                for (auto& sub : detail::subtree_shapes(first, memo)) {
                    partial.push_back(sub);
                    go(remaining - first, parts + 1);
                    partial.pop_back();
                }
            }
        };
        go(n - 1, 0);
    }
    return out;
}

/// Deterministic pseudo-random Halin graph with the given leaf count: grows
/// a tree by expanding random leaves into inner vertices with >= 2 children.
inline HalinGraph random_halin(int leaves, std::uint64_t seed) {
    if (leaves < 3) throw std::invalid_argument("random_halin: need at least 3 leaves");
    std::mt19937_64 rng(seed);
    PlaneTree t;
    t.root = 0;
    t.children.assign(1, {});
    // initial root fanout: 3..leaves, never leaving exactly 1 leaf to add
    int c0;
    if (leaves == 3) {
        c0 = 3;
    } else {
        do {
            c0 = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(leaves - 2));
        } while (leaves - c0 == 1);
    }
    std::vector<Vertex> leaf_list;
    for (int i = 0; i < c0; ++i) {
        Vertex id = t.num_vertices();
        t.children.push_back({});
        t.children[0].push_back(id);
        leaf_list.push_back(id);
    }
    while (static_cast<int>(leaf_list.size()) < leaves) {
        int remaining = leaves - static_cast<int>(leaf_list.size());
        // expanding a leaf with c children nets c-1 new leaves; c >= 2 keeps
        // the expanded vertex at tree degree >= 3
        int net = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(remaining, 3)));
        int c = net + 1;
        std::size_t pick = rng() % leaf_list.size();
        Vertex v = leaf_list[pick];
        leaf_list.erase(leaf_list.begin() + static_cast<std::ptrdiff_t>(pick));
        for (int i = 0; i < c; ++i) {
            Vertex id = t.num_vertices();
            t.children.push_back({});
            t.children[v].push_back(id);
            leaf_list.push_back(id);
        }
    }
    return HalinGraph::build(t);
}

}  // namespace halin_at

#endif
