#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "planar/conflict.hpp"

using namespace planar;

TEST_CASE("bridges of the K33 hexagon are its three chords") {
    Graph k33 = canonical_graph("K33");
    Cycle hex = cycle_from_vertices(k33, {0, 3, 1, 4, 2, 5});
    auto bridges = bridges_of_cycle(k33, hex);
    REQUIRE(bridges.size() == 3);
    std::set<std::pair<int, int>> chords;
    for (const auto &b : bridges) {
        CHECK(b.kind == Bridge::Kind::Chord);
        REQUIRE(b.attachments.size() == 2);
        int u = b.attachments[0], v = b.attachments[1];
        chords.insert({std::min(u, v), std::max(u, v)});
    }
    CHECK(chords == std::set<std::pair<int, int>>{{0, 4}, {1, 5}, {2, 3}});
}

TEST_CASE("bridges of a W5 triangle: one component bridge") {
    Graph w5 = canonical_graph("W5");
    Cycle tri = cycle_from_vertices(w5, {0, 3, 4});
    auto bridges = bridges_of_cycle(w5, tri);
    REQUIRE(bridges.size() == 1);
    const Bridge &b = bridges[0];
    CHECK(b.kind == Bridge::Kind::Component);
    CHECK(b.vertices == std::vector<int>{1, 2, 5});
    std::set<int> att(b.attachments.begin(), b.attachments.end());
    CHECK(att == std::set<int>{0, 3, 4});
}

TEST_CASE("a plain cycle has no bridges") {
    Graph c6 = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    Cycle whole = cycle_from_vertices(c6, {0, 1, 2, 3, 4, 5});
    CHECK(bridges_of_cycle(c6, whole).empty());
}

TEST_CASE("bridge edge sets partition the off-cycle edges") {
    for (const char *name : {"K5", "K33", "W5", "Q3", "Petersen"}) {
        Graph g = canonical_graph(name);
        SpanningTree t = spanning_tree(g, 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (t.is_tree_edge[e]) continue;
            Cycle c = fundamental_cycle(g, t, e);
            auto bridges = bridges_of_cycle(g, c);
            std::vector<int> cover(g.edge_count(), 0);
            c.edges.for_each([&](int id) { ++cover[id]; });
            for (const auto &b : bridges)
                b.edges.for_each([&](int id) { ++cover[id]; });
            for (int id = 0; id < g.edge_count(); ++id) CHECK(cover[id] == 1);
        }
    }
}

TEST_CASE("conflicts on hexagon chords per the definition") {
    Graph k33 = canonical_graph("K33");
    Cycle hex = cycle_from_vertices(k33, {0, 3, 1, 4, 2, 5});
    auto bridges = bridges_of_cycle(k33, hex);
    auto find_chord = [&](int u, int v) -> const Bridge & {
        for (const auto &b : bridges) {
            std::set<int> a(b.attachments.begin(), b.attachments.end());
            if (a == std::set<int>{u, v}) return b;
        }
        FAIL("chord not found");
        return bridges[0];
    };
    const Bridge &c04 = find_chord(0, 4);
    const Bridge &c15 = find_chord(1, 5);
    const Bridge &c23 = find_chord(2, 3);

    auto w = conflicts(c04, c15, hex);
    REQUIRE(w.has_value());
    CHECK(w->mode == ConflictWitness::Mode::Interleave);
    // Positions around the hexagon: 0->0, 3->1, 1->2, 4->3, 2->4, 5->5.
    // Chord (0,4) occupies {0,3}, chord (1,5) occupies {2,5}: witness 0,2,3,5.
    std::vector<int> pos;
    std::vector<int> order = {0, 3, 1, 4, 2, 5};
    for (int v : w->points)
        pos.push_back(static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin()));
    CHECK(pos == std::vector<int>{0, 2, 3, 5});

    CHECK(conflicts(c04, c23, hex).has_value());
    CHECK(conflicts(c15, c23, hex).has_value());

    // Symmetry.
    CHECK(conflicts(c15, c04, hex).has_value());
}

TEST_CASE("chords sharing an endpoint with nested other ends do not conflict") {
    // 6-cycle plus chords (0,2) and (0,3): shared endpoint 0, ends 2 and 3
    // nested on the same side.
    Graph g = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {0, 3}});
    Cycle c = cycle_from_vertices(g, {0, 1, 2, 3, 4, 5});
    auto bridges = bridges_of_cycle(g, c);
    REQUIRE(bridges.size() == 2);
    CHECK(!conflicts(bridges[0], bridges[1], c).has_value());
}

TEST_CASE("three shared attachments conflict") {
    // Cycle 0..5 with two degree-3 hubs attached at {0,2,4}.
    Graph g = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                               {6, 0}, {6, 2}, {6, 4}, {7, 0}, {7, 2}, {7, 4}});
    Cycle c = cycle_from_vertices(g, {0, 1, 2, 3, 4, 5});
    auto bridges = bridges_of_cycle(g, c);
    REQUIRE(bridges.size() == 2);
    auto w = conflicts(bridges[0], bridges[1], c);
    REQUIRE(w.has_value());
    CHECK(w->mode == ConflictWitness::Mode::Shared3);
    CHECK(std::set<int>(w->points.begin(), w->points.end()) == std::set<int>{0, 2, 4});
}

TEST_CASE("conflict graph of the K33 hexagon is a triangle") {
    Graph k33 = canonical_graph("K33");
    Cycle hex = cycle_from_vertices(k33, {0, 3, 1, 4, 2, 5});
    ConflictGraph h = conflict_graph(k33, hex);
    CHECK(h.node_count == 3);
    CHECK(h.edges.size() == 3);

    auto res = two_color(h, 0);
    REQUIRE(std::holds_alternative<OddCycleWitness>(res));
    CHECK(std::get<OddCycleWitness>(res).nodes.size() == 3);
}

TEST_CASE("K5 fundamental cycles have a single bridge") {
    Graph k5 = canonical_graph("K5");
    SpanningTree t = spanning_tree(k5, 0);
    for (int e = 0; e < k5.edge_count(); ++e) {
        if (t.is_tree_edge[e]) continue;
        Cycle c = fundamental_cycle(k5, t, e);
        ConflictGraph h = conflict_graph(k5, c);
        CHECK(h.node_count == 1);
        CHECK(h.edges.empty());
    }
}

TEST_CASE("two_color on paths and empty graphs") {
    ConflictGraph path;
    path.node_count = 3;
    path.adj = {{1}, {0, 2}, {1}};
    path.edges = {{0, 1, {}}, {1, 2, {}}};
    auto res = two_color(path, 0);
    REQUIRE(std::holds_alternative<Coloring>(res));
    CHECK(std::get<Coloring>(res).color == std::vector<int>{0, 1, 0});

    ConflictGraph empty;
    auto r2 = two_color(empty, -1);
    CHECK(std::get<Coloring>(r2).color.empty());

    CHECK_THROWS_AS(two_color(path, 5), std::invalid_argument);
}

TEST_CASE("two_color anchors each component at its smallest node") {
    ConflictGraph h;
    h.node_count = 5;
    h.adj = {{1}, {0}, {}, {4}, {3}};
    h.edges = {{0, 1, {}}, {3, 4, {}}};
    auto res = two_color(h, 1);
    REQUIRE(std::holds_alternative<Coloring>(res));
    auto col = std::get<Coloring>(res).color;
    CHECK(col[1] == 0); // anchor
    CHECK(col[0] == 1);
    CHECK(col[2] == 0); // singleton anchored at itself
    CHECK(col[3] == 0); // smallest in its component
    CHECK(col[4] == 1);
}

TEST_CASE("fundamental-cycle conflict graphs of 3-connected planar graphs are bipartite and connected") {
    for (const char *name : {"K4", "W5", "Q3", "grid(3,3)"}) {
        // grid(3,3) is not 3-connected; keep it anyway as a bipartiteness check.
        Graph g = canonical_graph(name);
        bool require_connected = std::string(name) != "grid(3,3)";
        SpanningTree t = spanning_tree(g, 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (t.is_tree_edge[e]) continue;
            Cycle c = fundamental_cycle(g, t, e);
            ConflictGraph h = conflict_graph(g, c);
            auto res = two_color(h, h.node_count ? 0 : -1);
            CHECK(std::holds_alternative<Coloring>(res));
            if (require_connected && h.node_count > 1) {
                // connectivity: single BFS reach from node 0
                std::vector<char> seen(h.node_count, 0);
                std::vector<int> st = {0};
                seen[0] = 1;
                int cnt = 1;
                while (!st.empty()) {
                    int v = st.back();
                    st.pop_back();
                    for (int w : h.adj[v])
                        if (!seen[w]) {
                            seen[w] = 1;
                            ++cnt;
                            st.push_back(w);
                        }
                }
                CHECK(cnt == h.node_count);
            }
        }
    }
}
