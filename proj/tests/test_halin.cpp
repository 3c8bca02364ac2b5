#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "halin_at/halin.hpp"
#include "halin_at/json_io.hpp"

using namespace halin_at;

namespace {

// two adjacent inner vertices with a and b leaves respectively
PlaneTree double_star(int a, int b) {
    PlaneTree t;
    t.root = 0;
    t.children.assign(2 + a + b, {});
    int next = 2;
    for (int i = 0; i < a; ++i) t.children[0].push_back(next++);
    t.children[0].push_back(1);
    for (int i = 0; i < b; ++i) t.children[1].push_back(next++);
    return t;
}

void check_halin_invariants(const HalinGraph& h) {
    const Graph& g = h.graph();
    auto deg = g.degrees();
    auto adj = g.adjacency();
    int n = h.num_outer();
    REQUIRE(n >= 3);
    // outer vertices have degree 3 and exactly one inner neighbor
    for (Vertex v = 0; v < n; ++v) {
        CHECK(deg[v] == 3);
        int inner_nbrs = 0;
        for (Vertex w : adj[v])
            if (!h.is_outer(w)) ++inner_nbrs;
        CHECK(inner_nbrs == 1);
    }
    for (Vertex v : h.inner_vertices()) CHECK(deg[v] >= 3);
    CHECK(g.num_edges() == (g.num_vertices() - 1) + n);
    // outer cycle edges present
    for (int i = 0; i < n; ++i) CHECK(g.has_edge(i, (i + 1) % n));
}

}  // namespace

TEST_CASE("build_halin from stars") {
    HalinGraph w8 = HalinGraph::build([] {
        PlaneTree t;
        t.root = 0;
        t.children.assign(9, {});
        for (int i = 1; i <= 8; ++i) t.children[0].push_back(i);
        return t;
    }());
    CHECK(w8.num_outer() == 8);
    CHECK(w8.num_vertices() == 9);
    CHECK(w8.is_wheel());
    check_halin_invariants(w8);

    HalinGraph k4 = HalinGraph::wheel(3);
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.graph().num_edges() == 6);  // K4
    check_halin_invariants(k4);
}

TEST_CASE("degree-2 tree vertex is rejected") {
    PlaneTree t;
    t.root = 0;
    t.children.assign(5, {});
    t.children[0] = {1, 2, 3};
    t.children[3] = {4};  // degree 2
    CHECK_THROWS_AS(HalinGraph::build(t), std::invalid_argument);
}

TEST_CASE("too few leaves is rejected") {
    PlaneTree t;
    t.root = 0;
    t.children.assign(1, {});
    CHECK_THROWS_AS(HalinGraph::build(t), std::invalid_argument);
    CHECK_THROWS_AS(HalinGraph::wheel(2), std::invalid_argument);
}

TEST_CASE("wheel structure") {
    HalinGraph w5 = HalinGraph::wheel(5);
    CHECK(w5.num_vertices() == 6);
    CHECK(w5.is_wheel());
    check_halin_invariants(w5);
    CHECK_FALSE(HalinGraph::build(double_star(3, 3)).is_wheel());
}

TEST_CASE("special inner vertices") {
    CHECK_THROWS_AS(special_inner_vertices(HalinGraph::wheel(5)), std::invalid_argument);

    HalinGraph ds = HalinGraph::build(double_star(3, 3));
    auto specials = special_inner_vertices(ds);
    CHECK(specials.size() == 2);  // both inner vertices
    CHECK(specials == ds.inner_vertices());
}

TEST_CASE("every non-wheel has at least two special inner vertices") {
    for (const auto& h : enumerate_halin(10)) {
        check_halin_invariants(h);
        if (h.is_wheel()) continue;
        CHECK(special_inner_vertices(h).size() >= 2);
    }
}

TEST_CASE("fan of a special vertex") {
    HalinGraph ds = HalinGraph::build(double_star(3, 4));
    for (Vertex u : special_inner_vertices(ds)) {
        Fan f = fan_of(ds, u);
        CHECK(f.hub == u);
        auto adj = ds.graph().adjacency();
        int outer_nbrs = 0;
        for (Vertex w : adj[u])
            if (ds.is_outer(w)) ++outer_nbrs;
        CHECK(f.k() == outer_nbrs);
        // rim is consecutive on the outer cycle
        int n = ds.num_outer();
        for (int i = 0; i + 1 < f.k(); ++i)
            CHECK((f.rim[i] + 1) % n == f.rim[i + 1]);
        for (Vertex v : f.rim) CHECK(ds.graph().has_edge(u, v));
    }
    CHECK_THROWS_AS(fan_of(ds, 0), std::invalid_argument);  // outer vertex is not special
}

TEST_CASE("split_at_fan yields the three crossing edges") {
    HalinGraph ds = HalinGraph::build(double_star(3, 3));
    Fan f = fan_of(ds, special_inner_vertices(ds)[0]);
    FanSplit s = split_at_fan(ds, f);
    CHECK(s.crossing.size() == 3);
    std::set<Edge> expect;
    Vertex v = s.hub_inner_neighbor;
    expect.insert({std::min(f.hub, v), std::max(f.hub, v)});
    expect.insert({std::min(f.rim.front(), s.before_rim), std::max(f.rim.front(), s.before_rim)});
    expect.insert({std::min(f.rim.back(), s.after_rim), std::max(f.rim.back(), s.after_rim)});
    CHECK(std::set<Edge>(s.crossing.begin(), s.crossing.end()) == expect);
    CHECK(s.fan_part.num_edges() == 2 * f.k() - 1);
    CHECK(s.fan_part.num_edges() + s.remainder.num_edges() + 3 == ds.graph().num_edges());
}

TEST_CASE("enumerate_halin census") {
    CHECK(enumerate_halin(4).size() == 1);  // K4 only
    CHECK(enumerate_halin(5).size() == 2);  // K4, wheel(4)
    // golden census per vertex count, one representative per plane-tree shape
    std::vector<int> per_n(13, 0);
    for (const auto& h : enumerate_halin(12)) ++per_n[h.num_vertices()];
    std::vector<int> golden{1, 1, 4, 8, 22, 54, 142, 370, 983};
    for (int n = 4; n <= 12; ++n) CHECK(per_n[n] == golden[n - 4]);
    // wheels are present for every rim size in range
    int wheels = 0;
    for (const auto& h : enumerate_halin(10))
        if (h.is_wheel()) ++wheels;
    CHECK(wheels == 7);  // rims 3..9
    CHECK_THROWS_AS(enumerate_halin(13), std::invalid_argument);
}

TEST_CASE("random_halin is deterministic and valid") {
    HalinGraph a = random_halin(8, 1);
    HalinGraph b = random_halin(8, 1);
    CHECK(a.graph() == b.graph());
    CHECK(a.num_outer() == 8);
    check_halin_invariants(a);

    CHECK(random_halin(3, 99).graph() == HalinGraph::wheel(3).graph());  // forced K4
    for (int leaves = 3; leaves <= 12; ++leaves)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            HalinGraph h = random_halin(leaves, seed);
            CHECK(h.num_outer() == leaves);
            check_halin_invariants(h);
        }
    CHECK_THROWS_AS(random_halin(2, 0), std::invalid_argument);
}

TEST_CASE("halin JSON round trip") {
    for (const auto& h : {HalinGraph::wheel(6), random_halin(7, 3)}) {
        json j = to_json(h);
        HalinGraph back = halin_from_json(j);
        CHECK(back.graph() == h.graph());
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("graph and digraph JSON round trip") {
    Graph g = HalinGraph::wheel(5).graph();
    CHECK(graph_from_json(to_json(g)) == g);
    Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
    CHECK(digraph_from_json(to_json(d)) == d);
}

TEST_CASE("certificate JSON verification") {
    AtCertificate c = construct_at_orientation(HalinGraph::wheel(8));
    json j = to_json(c);
    CHECK(verify_certificate_json(j));
    json tampered = j;
    auto arc = tampered["arcs"][0];
    tampered["arcs"][0] = {arc[1], arc[0]};
    CHECK_FALSE(verify_certificate_json(tampered));
    json wrong_count = j;
    wrong_count["even"] = wrong_count["even"].get<int>() + 1;
    CHECK_FALSE(verify_certificate_json(wrong_count));
}

TEST_CASE("dot export marks inner vertices") {
    std::string dot = to_dot(HalinGraph::wheel(4));
    CHECK(dot.find("4 [shape=box]") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}
