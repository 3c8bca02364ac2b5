#ifndef HALIN_AT_EULERIAN_HPP
#define HALIN_AT_EULERIAN_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "halin_at/graph.hpp"

namespace halin_at {

/// Exact counts of spanning Eulerian subdigraphs, split by arc-count parity.
/// The empty arc set is Eulerian and even, so even >= 1 always.
struct EulerianTally {
    std::int64_t even = 0;
    std::int64_t odd = 0;
    std::int64_t diff() const { return even - odd; }
};

inline constexpr int kDefaultTallyArcCap = 30;
inline constexpr long kDefaultCycleCap = 1000000;
inline constexpr int kDefaultOracleArcCap = 16;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct TallyState {
    const std::vector<Arc>* arcs;
    std::vector<int> bal;      // chosen out - chosen in, per vertex
    std::vector<int> rem_out;  // undecided arcs with this tail
    std::vector<int> rem_in;   // undecided arcs with this head
    EulerianTally tally;

    bool feasible(Vertex v) const {
        // bal[v] must be repairable with the undecided arcs at v
        return bal[v] <= rem_in[v] && -bal[v] <= rem_out[v];
    }

    void recurse(std::size_t i, int parity) {
        if (i == arcs->size()) {
            (parity ? tally.odd : tally.even) += 1;
            return;
        }
        auto [u, v] = (*arcs)[i];
        --rem_out[u];
        --rem_in[v];

        // exclude arc i
        if (feasible(u) && feasible(v)) recurse(i + 1, parity);

        // include arc i
        ++bal[u];
        --bal[v];
        if (feasible(u) && feasible(v)) recurse(i + 1, parity ^ 1);
        --bal[u];
        ++bal[v];

        ++rem_out[u];
        ++rem_in[v];
    }
};

}  // namespace detail

/// Counts all arc subsets S with indegree = outdegree at every vertex of the
/// spanning subdigraph (V, S). Exact; throws CapExceeded above arc_cap.
inline EulerianTally tally_eulerian(const Digraph& d, int arc_cap = kDefaultTallyArcCap) {
    if (d.num_arcs() > arc_cap)
        throw CapExceeded("tally_eulerian: arc count exceeds cap");
    detail::TallyState st;
    st.arcs = &d.arcs();
    st.bal.assign(d.num_vertices(), 0);
    st.rem_out.assign(d.num_vertices(), 0);
    st.rem_in.assign(d.num_vertices(), 0);
    for (auto [u, v] : d.arcs()) {
        ++st.rem_out[u];
        ++st.rem_in[v];
    }
    st.recurse(0, 0);
    return st.tally;
}

inline bool is_alon_tarsi(const Digraph& d, int arc_cap = kDefaultTallyArcCap) {
    return tally_eulerian(d, arc_cap).diff() != 0;
}

inline bool is_acyclic(const Digraph& d) {
    auto adj = d.out_adjacency();
    int n = d.num_vertices();
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<Vertex, std::size_t>> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (state[s]) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < adj[v].size()) {
                Vertex w = adj[v][idx++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

namespace detail {

// Tiernan-style enumeration: from each root s, extend simple paths through
// vertices > s only, closing a cycle on an arc back to s.
struct CycleEnum {
    const std::vector<std::vector<Vertex>>* adj;
    std::vector<std::pair<Vertex, Vertex>> path_arcs;
    std::vector<bool> on_path;
    Vertex root;
    long cap;
    std::vector<std::vector<int>>* out;
    const std::vector<std::vector<int>>* arc_index;  // arc_index[u][v] or -1

    void emit() {
        if (static_cast<long>(out->size()) >= cap)
            throw CapExceeded("directed_cycles: cycle count exceeds cap");
        std::vector<int> cyc;
        cyc.reserve(path_arcs.size());
        for (auto [u, v] : path_arcs) cyc.push_back((*arc_index)[u][v]);
        out->push_back(std::move(cyc));
    }

    void extend(Vertex v) {
        for (Vertex w : (*adj)[v]) {
            if (w == root) {
                path_arcs.push_back({v, w});
                emit();
                path_arcs.pop_back();
            } else if (w > root && !on_path[w]) {
                on_path[w] = true;
                path_arcs.push_back({v, w});
                extend(w);
                path_arcs.pop_back();
                on_path[w] = false;
            }
        }
    }
};

}  // namespace detail

/// All simple directed cycles, each as a list of arc indices in path order.
inline std::vector<std::vector<int>> directed_cycles(const Digraph& d,
                                                     long cycle_cap = kDefaultCycleCap) {
    int n = d.num_vertices();
    std::vector<std::vector<int>> arc_index(n, std::vector<int>(n, -1));
    for (int i = 0; i < d.num_arcs(); ++i) {
        auto [u, v] = d.arcs()[i];
        arc_index[u][v] = i;
    }
    std::vector<std::vector<int>> cycles;
    detail::CycleEnum en;
    auto adj = d.out_adjacency();
    en.adj = &adj;
    en.on_path.assign(n, false);
    en.cap = cycle_cap;
    en.out = &cycles;
    en.arc_index = &arc_index;
    for (Vertex s = 0; s < n; ++s) {
        en.root = s;
        en.on_path[s] = true;
        en.extend(s);
        en.on_path[s] = false;
    }
    return cycles;
}

inline bool has_odd_directed_cycle(const Digraph& d, long cycle_cap = kDefaultCycleCap) {
    for (const auto& cyc : directed_cycles(d, cycle_cap))
        if (cyc.size() % 2 != 0) return true;
    return false;
}

namespace detail {

struct OracleState {
    const std::vector<Arc>* arcs;
    std::vector<int> count;         // exponent accumulated so far, per vertex
    const std::vector<int>* target; // outdegree of each vertex
    std::int64_t coeff = 0;

    void recurse(std::size_t i, int sign) {
        if (i == arcs->size()) {
            coeff += sign;
            return;
        }
        auto [u, v] = (*arcs)[i];
        if (count[u] < (*target)[u]) {
            ++count[u];
            recurse(i + 1, sign);
            --count[u];
        }
        if (count[v] < (*target)[v]) {
            ++count[v];
            recurse(i + 1, -sign);
            --count[v];
        }
    }
};

}  // namespace detail

/// Coefficient of the monomial prod_v x_v^{outdeg(v)} in the expansion of
/// prod_{(u,v)} (x_u - x_v), by direct term-by-term expansion.
/// |result| equals |diff| of the Eulerian tally of the same orientation.
inline std::int64_t poly_coefficient_oracle(const Orientation& o,
                                            int arc_cap = kDefaultOracleArcCap) {
    const Digraph& d = o.digraph();
    if (d.num_arcs() > arc_cap)
        throw CapExceeded("poly_coefficient_oracle: arc count exceeds cap");
    detail::OracleState st;
    auto target = d.out_degrees();
    st.arcs = &d.arcs();
    st.count.assign(d.num_vertices(), 0);
    st.target = &target;
    st.recurse(0, 1);
    return st.coeff;
}

}  // namespace halin_at

#endif
