#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "planar/kuratowski.hpp"
#include "planar/oracle.hpp"
#include "test_helpers.hpp"

using namespace planar;
using planar::testing::interleaved_chord_cycle;
using planar::testing::interleaved_path_cycle;

TEST_CASE("minimal_nonplanar_prefix on K5 and K33") {
    Graph k5 = canonical_graph("K5");
    MinimalPrefix mp = minimal_nonplanar_prefix(k5);
    CHECK(mp.prefix.edge_count() == 10); // K5 is edge-minimal non-planar
    CHECK(mp.culprit == 9);
    CHECK(((mp.x == 3 && mp.y == 4) || (mp.x == 4 && mp.y == 3)));

    Graph k33 = canonical_graph("K33");
    MinimalPrefix m33 = minimal_nonplanar_prefix(k33);
    CHECK(m33.prefix.edge_count() == 9);

    // K5 plus a pendant edge appended last: culprit stays inside K5.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
    pairs.emplace_back(0, 5);
    Graph plus = Graph::build(6, pairs);
    MinimalPrefix mpp = minimal_nonplanar_prefix(plus);
    CHECK(mpp.prefix.edge_count() == 10);
    CHECK(mpp.x <= 4);
    CHECK(mpp.y <= 4);

    CHECK_THROWS_AS(minimal_nonplanar_prefix(canonical_graph("K4")), std::invalid_argument);
}

TEST_CASE("prefix monotonicity holds around the boundary") {
    for (const char *name : {"K5", "K33", "Petersen"}) {
        Graph g = canonical_graph(name);
        MinimalPrefix mp = minimal_nonplanar_prefix(g);
        int i = mp.prefix.edge_count();
        // prefix of size i is non-planar, of size i-1 planar
        std::vector<std::pair<int, int>> pre;
        for (int e = 0; e + 1 < i; ++e)
            pre.emplace_back(g.edge(e).u, g.edge(e).v);
        Graph smaller = Graph::build(g.vertex_count(), pre);
        CHECK(is_planar_result(embed(smaller)));
        CHECK(!is_planar_result(embed(mp.prefix)));
    }
}

TEST_CASE("witness_cycle yields a non-bipartite conflict graph") {
    for (const char *name : {"K5", "K33", "Petersen"}) {
        Graph g = canonical_graph(name);
        MinimalPrefix mp = minimal_nonplanar_prefix(g);
        WitnessCycle wc = witness_cycle(mp);
        auto colored = two_color(wc.h, 0);
        CHECK(std::holds_alternative<OddCycleWitness>(colored));
    }
    // When the culprit endpoints have degree >= 2 in the embedded subgraph the
    // cycle passes through both of them.
    for (const char *name : {"K5", "K33"}) {
        Graph g = canonical_graph(name);
        MinimalPrefix mp = minimal_nonplanar_prefix(g);
        WitnessCycle wc = witness_cycle(mp);
        bool on_x = false, on_y = false;
        for (int v : wc.cycle.vertices) {
            if (v == wc.x) on_x = true;
            if (v == wc.y) on_y = true;
        }
        CHECK(on_x);
        CHECK(on_y);
    }
}

TEST_CASE("induced_odd_cycle on hand-built conflict graphs") {
    // Triangle: returned as-is.
    ConflictGraph tri;
    tri.node_count = 3;
    tri.adj = {{1, 2}, {0, 2}, {0, 1}};
    tri.edges = {{0, 1, {}}, {0, 2, {}}, {1, 2, {}}};
    CHECK(induced_odd_cycle(tri).size() == 3);

    // C9: returned whole.
    ConflictGraph c9;
    c9.node_count = 9;
    c9.adj.resize(9);
    for (int i = 0; i < 9; ++i) {
        int j = (i + 1) % 9;
        c9.adj[i].push_back(j);
        c9.adj[j].push_back(i);
        c9.edges.push_back({i, j, {}});
    }
    CHECK(induced_odd_cycle(c9).size() == 9);

    // C5 plus one chord: a shorter induced odd cycle must come back.
    ConflictGraph c5c;
    c5c.node_count = 5;
    c5c.adj.resize(5);
    auto add = [&](int a, int b) {
        c5c.adj[a].push_back(b);
        c5c.adj[b].push_back(a);
        c5c.edges.push_back({a, b, {}});
    };
    add(0, 1);
    add(1, 2);
    add(2, 3);
    add(3, 4);
    add(4, 0);
    add(0, 2);
    auto cyc = induced_odd_cycle(c5c);
    CHECK(cyc.size() == 3);
    std::set<int> nodes(cyc.begin(), cyc.end());
    CHECK(nodes == std::set<int>{0, 1, 2});

    // bipartite input is an error
    ConflictGraph even;
    even.node_count = 4;
    even.adj = {{1, 3}, {0, 2}, {1, 3}, {0, 2}};
    even.edges = {{0, 1, {}}, {1, 2, {}}, {2, 3, {}}, {3, 0, {}}};
    CHECK_THROWS_AS(induced_odd_cycle(even), std::invalid_argument);
}

TEST_CASE("chord-ring instance: conflict graph is the induced 9-cycle") {
    Graph g = interleaved_chord_cycle(4);
    CHECK(g.vertex_count() == 18);
    CHECK(g.edge_count() == 27);
    std::vector<int> walk(18);
    for (int i = 0; i < 18; ++i) walk[i] = i;
    Cycle c = cycle_from_vertices(g, walk);
    ConflictGraph h = conflict_graph(g, c);
    CHECK(h.node_count == 9);
    CHECK(h.edges.size() == 9);
    std::vector<int> odd = induced_odd_cycle(h);
    CHECK(odd.size() == 9);
}

TEST_CASE("reduce_bridges_to_paths finds the pattern on chord-ring instances") {
    for (int k : {2, 3, 4, 6}) {
        Graph g = interleaved_chord_cycle(k);
        std::vector<int> walk(4 * k + 2);
        for (int i = 0; i < 4 * k + 2; ++i) walk[i] = i;
        WitnessCycle wc;
        wc.gprime = g;
        wc.cycle = cycle_from_vertices(g, walk);
        wc.bridges = bridges_of_cycle(g, wc.cycle);
        wc.h = conflict_graph_of_bridges(wc.bridges, wc.cycle);
        std::vector<int> odd = induced_odd_cycle(wc.h);
        REQUIRE(static_cast<int>(odd.size()) == 2 * k + 1);

        ReduceOutcome ro = reduce_bridges_to_paths(wc, odd);
        REQUIRE(ro.status == ReduceOutcome::Status::Ok);
        CHECK(static_cast<int>(ro.reduction.odd.size()) == 2 * k + 1);
        // chosen pairs are exactly the chords
        for (int j = 0; j <= 2 * k; ++j) {
            auto [u, v] = ro.reduction.chosen[j];
            CHECK(g.has_edge(u, v));
        }

        KuratowskiMinor minor = k5_minor_from_reduction(wc, ro.reduction);
        CHECK(minor.kind == MinorModel::Kind::K5);
        CHECK(verify_minor(g, minor));
    }
}

TEST_CASE("reduction handles component bridges (subdivided chords)") {
    for (int k : {2, 4}) {
        Graph g = interleaved_path_cycle(k);
        std::vector<int> walk(4 * k + 2);
        for (int i = 0; i < 4 * k + 2; ++i) walk[i] = i;
        WitnessCycle wc;
        wc.gprime = g;
        wc.cycle = cycle_from_vertices(g, walk);
        wc.bridges = bridges_of_cycle(g, wc.cycle);
        wc.h = conflict_graph_of_bridges(wc.bridges, wc.cycle);
        std::vector<int> odd = induced_odd_cycle(wc.h);
        REQUIRE(static_cast<int>(odd.size()) == 2 * k + 1);
        ReduceOutcome ro = reduce_bridges_to_paths(wc, odd);
        REQUIRE(ro.status == ReduceOutcome::Status::Ok);
        // paths pass through the subdivision vertices
        for (const auto &p : ro.reduction.paths) CHECK(p.size() == 3);
        KuratowskiMinor minor = k5_minor_from_reduction(wc, ro.reduction);
        CHECK(verify_minor(g, minor));
    }
}

TEST_CASE("triangle_case on the K33 hexagon") {
    Graph g = canonical_graph("K33");
    WitnessCycle wc;
    wc.gprime = g;
    wc.cycle = cycle_from_vertices(g, {0, 3, 1, 4, 2, 5});
    wc.bridges = bridges_of_cycle(g, wc.cycle);
    wc.h = conflict_graph_of_bridges(wc.bridges, wc.cycle);
    REQUIRE(wc.bridges.size() == 3);
    KuratowskiMinor minor = triangle_case(wc, {0, 1, 2});
    CHECK(minor.kind == MinorModel::Kind::K33);
    CHECK(verify_minor(g, minor));
}

TEST_CASE("find_kuratowski on the named non-planar graphs") {
    {
        KuratowskiMinor m = find_kuratowski(canonical_graph("K5"));
        CHECK(m.kind == MinorModel::Kind::K5);
        CHECK(verify_minor(canonical_graph("K5"), m));
        // 5 disjoint sets in a 5-vertex graph are singletons
        for (const auto &bs : m.branch_sets) CHECK(bs.size() == 1);
    }
    {
        KuratowskiMinor m = find_kuratowski(canonical_graph("K33"));
        CHECK(m.kind == MinorModel::Kind::K33);
        CHECK(verify_minor(canonical_graph("K33"), m));
        for (const auto &bs : m.branch_sets) CHECK(bs.size() == 1);
    }
    {
        Graph pet = canonical_graph("Petersen");
        KuratowskiMinor m = find_kuratowski(pet);
        CHECK(verify_minor(pet, m));
    }
    {
        // K6 contains both; whatever comes out must verify
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) pairs.emplace_back(u, v);
        Graph k6 = Graph::build(6, pairs);
        KuratowskiMinor m = find_kuratowski(k6);
        CHECK(verify_minor(k6, m));
    }
    CHECK_THROWS_AS(find_kuratowski(canonical_graph("K4")), std::invalid_argument);
}

TEST_CASE("find_kuratowski end-to-end on chord-ring instances") {
    for (int k : {2, 3, 4}) {
        Graph g = interleaved_chord_cycle(k);
        KuratowskiMinor m = find_kuratowski(g);
        CHECK(verify_minor(g, m));
    }
}

TEST_CASE("find_kuratowski on random non-planar graphs agrees with the oracle") {
    int found = 0;
    for (int seed = 0; seed < 60; ++seed) {
        int n = 6 + seed % 4;
        int m = n + 3 + seed % (n * (n - 1) / 2 - n - 2);
        Graph g = gen_gnm(n, m, 7000 + seed);
        bool planar = tutte_planarity(g);
        if (planar) continue;
        ++found;
        KuratowskiMinor km = find_kuratowski(g);
        CHECK(verify_minor(g, km));
        CHECK((km.kind == MinorModel::Kind::K5 || km.kind == MinorModel::Kind::K33));
    }
    CHECK(found > 10);
}

TEST_CASE("forced shared endpoints: no distinct pattern selection exists") {
    // 12-cycle plus chords (0,6),(1,8),(0,3),(2,4),(3,7): the conflict graph
    // is an induced 5-cycle, but chords (0,6) and (0,3) are two non-adjacent
    // bridges forced to share attachment 0, so no selection with globally
    // distinct pattern points exists. The shared-endpoint reduction still
    // produces a verified K5.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 12; ++i) pairs.emplace_back(i, (i + 1) % 12);
    pairs.insert(pairs.end(), {{0, 6}, {1, 8}, {0, 3}, {2, 4}, {3, 7}});
    Graph g = Graph::build(12, pairs);
    std::vector<int> walk(12);
    for (int i = 0; i < 12; ++i) walk[i] = i;
    WitnessCycle wc;
    wc.gprime = g;
    wc.cycle = cycle_from_vertices(g, walk);
    wc.bridges = bridges_of_cycle(g, wc.cycle);
    wc.h = conflict_graph_of_bridges(wc.bridges, wc.cycle);
    REQUIRE(wc.h.node_count == 5);
    REQUIRE(wc.h.edges.size() == 5);
    std::vector<int> odd = induced_odd_cycle(wc.h);
    REQUIRE(odd.size() == 5);

    ReduceOutcome ro = reduce_bridges_to_paths(wc, odd);
    CHECK(ro.status == ReduceOutcome::Status::NoSelection);

    auto fb = reduce_with_shared_endpoints(wc, odd);
    REQUIRE(fb.has_value());
    CHECK(fb->kind == MinorModel::Kind::K5);
    CHECK(verify_minor(g, *fb));

    KuratowskiMinor m = find_kuratowski(g);
    CHECK(verify_minor(g, m));
}

TEST_CASE("consecutive bridges sharing exactly three attachments redirect to the triangle case") {
    // hexagon, two hubs attached at {0,2,4}, plus the three pairwise
    // interleaving main diagonals; an odd list threading both hubs
    // consecutively admits no interleaving pair between them, and the
    // redirected triangle is three mutually conflicting bridges.
    Graph g = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                               {6, 0}, {6, 2}, {6, 4}, {7, 0}, {7, 2}, {7, 4},
                               {0, 3}, {1, 4}, {2, 5}});
    WitnessCycle wc;
    wc.gprime = g;
    wc.cycle = cycle_from_vertices(g, {0, 1, 2, 3, 4, 5});
    wc.bridges = bridges_of_cycle(g, wc.cycle);
    wc.h = conflict_graph_of_bridges(wc.bridges, wc.cycle);
    REQUIRE(wc.bridges.size() == 5);

    int hub6 = -1, hub7 = -1, c03 = -1, c14 = -1, c25 = -1;
    for (int i = 0; i < 5; ++i) {
        const Bridge &b = wc.bridges[i];
        if (b.kind == Bridge::Kind::Component) {
            (b.vertices == std::vector<int>{6} ? hub6 : hub7) = i;
        } else {
            std::set<int> a(b.attachments.begin(), b.attachments.end());
            if (a == std::set<int>{0, 3}) c03 = i;
            if (a == std::set<int>{1, 4}) c14 = i;
            if (a == std::set<int>{2, 5}) c25 = i;
        }
    }
    REQUIRE(hub6 >= 0);
    REQUIRE(hub7 >= 0);

    std::vector<int> odd = {c03, hub6, hub7, c14, c25};
    ReduceOutcome ro = reduce_bridges_to_paths(wc, odd);
    REQUIRE(ro.status == ReduceOutcome::Status::RedirectToTriangle);
    // the redirected bridges conflict pairwise and resolve through triangle_case
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            CHECK(conflicts(wc.bridges[ro.triangle[a]], wc.bridges[ro.triangle[b]], wc.cycle)
                      .has_value());
    KuratowskiMinor m = triangle_case(wc, ro.triangle);
    CHECK(verify_minor(g, m));
}

TEST_CASE("find_kuratowski where x,y land in different blocks of the prefix") {
    // Take K5, subdivide nothing, but order edges so the culprit endpoints
    // fall into separate blocks of the remaining graph: K5 with edge (3,4)
    // last, prefix-minus-culprit = K5 minus an edge, still biconnected, so
    // instead build a graph whose minimal prefix splits into blocks:
    // two K4-blocks sharing vertex 0 plus a K5 made non-planar by the last
    // edge spanning them is hard to control; use a direct probe instead:
    // a K5 whose culprit removal leaves a cut vertex.
    // K5 on {0..4} with extra pendant path 3-5-4 and order chosen so the last
    // edge is (3,4)'s parallel route: delete (3,4) from K5, add path 3-5, 5-4,
    // then append (3,4). The prefix without (3,4) has blocks but stays planar.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 3 && v == 4)) pairs.emplace_back(u, v);
    pairs.emplace_back(3, 5);
    pairs.emplace_back(5, 4);
    pairs.emplace_back(3, 4);
    Graph g = Graph::build(6, pairs);
    REQUIRE(!is_planar_result(embed(g)));
    KuratowskiMinor m = find_kuratowski(g);
    CHECK(verify_minor(g, m));
}
