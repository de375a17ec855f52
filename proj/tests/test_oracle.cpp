#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "planar/embed.hpp"
#include "planar/oracle.hpp"

using namespace planar;

TEST_CASE("tutte_planarity on named graphs") {
    CHECK(tutte_planarity(canonical_graph("K4")));
    CHECK(!tutte_planarity(canonical_graph("K5")));
    CHECK(!tutte_planarity(canonical_graph("Petersen")));
    CHECK(tutte_planarity(canonical_graph("W5")));
    CHECK(tutte_planarity(canonical_graph("Q3")));
    CHECK(tutte_planarity(canonical_graph("grid(3,3)")));
    CHECK(!tutte_planarity(canonical_graph("K33")));

    Graph big = gen_gnm(11, 20, 3);
    CHECK_THROWS_AS(tutte_planarity(big), GuardExceeded);
    OracleOptions allow;
    allow.override_guards = true;
    CHECK_NOTHROW(tutte_planarity(big, allow));
}

TEST_CASE("brute_force_minor on named graphs") {
    auto m33 = brute_force_minor(canonical_graph("K33"), MinorModel::Kind::K33);
    REQUIRE(m33.has_value());
    CHECK(m33->branch_sets.size() == 6);
    for (const auto &bs : m33->branch_sets) CHECK(bs.size() == 1);
    CHECK(verify_minor(canonical_graph("K33"), *m33));

    CHECK(!brute_force_minor(canonical_graph("K4"), MinorModel::Kind::K5).has_value());
    CHECK(!brute_force_minor(canonical_graph("K4"), MinorModel::Kind::K33).has_value());

    Graph pet = canonical_graph("Petersen");
    auto pk5 = brute_force_minor(pet, MinorModel::Kind::K5);
    REQUIRE(pk5.has_value());
    CHECK(verify_minor(pet, *pk5));
    auto pk33 = brute_force_minor(pet, MinorModel::Kind::K33);
    REQUIRE(pk33.has_value());
    CHECK(verify_minor(pet, *pk33));

    // planar graphs have neither minor
    for (const char *name : {"W5", "Q3", "grid(3,3)"}) {
        Graph g = canonical_graph(name);
        CHECK(!brute_force_minor(g, MinorModel::Kind::K5).has_value());
        CHECK(!brute_force_minor(g, MinorModel::Kind::K33).has_value());
    }
}

TEST_CASE("verify_minor accepts and rejects correctly") {
    Graph k5 = canonical_graph("K5");
    MinorModel m;
    m.kind = MinorModel::Kind::K5;
    m.branch_sets = {{0}, {1}, {2}, {3}, {4}};
    CHECK(verify_minor(k5, m));

    MinorModel overlap = m;
    overlap.branch_sets[1] = {0};
    CHECK(!verify_minor(k5, overlap));

    Graph k33 = canonical_graph("K33");
    MinorModel b;
    b.kind = MinorModel::Kind::K33;
    b.branch_sets = {{0}, {1}, {2}, {3}, {4}, {5}};
    CHECK(verify_minor(k33, b));
    // remove one cross adjacency by moving a vertex out
    MinorModel missing = b;
    missing.branch_sets[5] = {5};
    Graph k33_minus = Graph::build(6, [&] {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v)
                if (!(u == 2 && v == 5)) pairs.emplace_back(u, v);
        return pairs;
    }());
    CHECK(!verify_minor(k33_minus, missing));

    // adjacency through a recorded path
    Graph path_graph = Graph::build(7, [&] {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v)
                if (!(u == 2 && v == 5)) pairs.emplace_back(u, v);
        pairs.emplace_back(2, 6);
        pairs.emplace_back(6, 5);
        return pairs;
    }());
    MinorModel with_path = b;
    with_path.paths = {{2, 6, 5}};
    CHECK(verify_minor(path_graph, with_path));
    // interior touching a branch set is rejected
    MinorModel bad_path = b;
    bad_path.paths = {{2, 0, 5}};
    CHECK(!verify_minor(path_graph, bad_path));
}

TEST_CASE("verify_embedding on hand-built embeddings") {
    Graph k4 = canonical_graph("K4");
    PlanarEmbedding pe;
    pe.rotation = {{0, 2, 1}, {0, 3, 4}, {1, 5, 3}, {2, 4, 5}};
    pe.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    pe.external = 0;
    CHECK(verify_embedding(k4, pe));

    // reversing one vertex's rotation breaks the face set
    PlanarEmbedding rev = pe;
    std::reverse(rev.rotation[2].begin(), rev.rotation[2].end());
    CHECK(!verify_embedding(k4, rev));

    // wrong face list
    PlanarEmbedding wrong = pe;
    wrong.faces[3] = {0, 1, 2};
    CHECK(!verify_embedding(k4, wrong));

    // malformed rotation throws
    PlanarEmbedding mal = pe;
    mal.rotation[0] = {0, 1};
    CHECK_THROWS_AS(verify_embedding(k4, mal), std::invalid_argument);

    // no rotation of K5 satisfies Euler: sample a few rotations
    Graph k5 = canonical_graph("K5");
    for (int variant = 0; variant < 8; ++variant) {
        PlanarEmbedding cand;
        cand.rotation.assign(5, {});
        for (int v = 0; v < 5; ++v) {
            std::vector<int> inc(k5.incident(v).begin(), k5.incident(v).end());
            if (variant & 1) std::reverse(inc.begin(), inc.end());
            std::rotate(inc.begin(), inc.begin() + (variant % inc.size()), inc.end());
            cand.rotation[v] = inc;
        }
        // accept whatever faces tracing would give: verify by checking count
        // via a throwaway embedding with the traced faces themselves.
        PlanarEmbedding probe = cand;
        probe.faces.clear();
        // verify_embedding(false) either due to face mismatch (empty) or Euler
        CHECK(!verify_embedding(k5, probe));
    }
}

TEST_CASE("embed output always passes verify_embedding") {
    for (const char *name : {"K4", "W5", "Q3", "grid(3,3)", "grid(2,5)", "Petersen"}) {
        Graph g = canonical_graph(name);
        EmbedResult r = embed(g);
        if (is_planar_result(r)) CHECK(verify_embedding(g, std::get<PlanarEmbedding>(r)));
    }
    // composite: two triangles sharing a vertex, tree, disconnected
    std::vector<Graph> more;
    more.push_back(Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}));
    more.push_back(Graph::build(6, {{0, 1}, {1, 2}, {3, 4}}));
    more.push_back(Graph::build(3, {}));
    for (const Graph &g : more) {
        EmbedResult r = embed(g);
        REQUIRE(is_planar_result(r));
        CHECK(verify_embedding(g, std::get<PlanarEmbedding>(r)));
    }
}

TEST_CASE("enumerate_facelike_cycles matches known face sets") {
    auto count = [](const char *name) {
        return enumerate_facelike_cycles(canonical_graph(name)).size();
    };
    CHECK(count("K4") == 4);
    CHECK(count("W5") == 6);
    Graph c6 = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(enumerate_facelike_cycles(c6).size() == 1);
    CHECK(count("Q3") == 6);
}

TEST_CASE("gen_triangulation basics and invariants") {
    auto [g4, pe4] = gen_triangulation(4, 0);
    CHECK(g4.edge_count() == 6);
    CHECK(pe4.faces.size() == 4);
    CHECK(verify_embedding(g4, pe4));

    auto [g10, pe10] = gen_triangulation(10, 1);
    CHECK(g10.edge_count() == 24); // 3n - 6
    CHECK(verify_embedding(g10, pe10));

    auto [g100, pe100] = gen_triangulation(100, 7);
    CHECK(g100.edge_count() == 294);
    CHECK(verify_embedding(g100, pe100));

    // determinism
    auto [h, peh] = gen_triangulation(10, 1);
    CHECK(h.edge_count() == g10.edge_count());
    bool same = true;
    for (int e = 0; e < h.edge_count(); ++e)
        if (h.edge(e).u != g10.edge(e).u || h.edge(e).v != g10.edge(e).v) same = false;
    CHECK(same);

    // 3-connectivity for small sizes
    for (int n = 4; n <= 11; ++n) {
        auto [g, pe] = gen_triangulation(n, 40 + n);
        CHECK(is_triconnected(g));
        CHECK(verify_embedding(g, pe));
        CHECK(g.edge_count() == 3 * n - 6);
    }
}

TEST_CASE("gen_gnm basics") {
    Graph k5 = gen_gnm(5, 10, 123);
    CHECK(k5.edge_count() == 10); // forced complete
    Graph g = gen_gnm(4, 3, 5);
    CHECK(g.edge_count() == 3);
    CHECK_THROWS_AS(gen_gnm(3, 4, 0), std::invalid_argument);
    // determinism
    Graph a = gen_gnm(9, 14, 99), b = gen_gnm(9, 14, 99);
    for (int e = 0; e < a.edge_count(); ++e) {
        CHECK(a.edge(e).u == b.edge(e).u);
        CHECK(a.edge(e).v == b.edge(e).v);
    }
}

TEST_CASE("three-way agreement on all connected graphs with n <= 5") {
    // The full n <= 6 sweep runs in the acceptance suite.
    for (int n = 1; n <= 5; ++n) {
        int slots = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << slots); ++mask) {
            std::vector<std::pair<int, int>> pairs;
            int idx = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++idx)
                    if (mask & (1u << idx)) pairs.emplace_back(u, v);
            Graph g = Graph::build(n, pairs);
            if (!g.connected()) continue;
            bool t = tutte_planarity(g);
            bool e = is_planar_result(embed(g));
            bool m = !brute_force_minor(g, MinorModel::Kind::K5).has_value() &&
                     !brute_force_minor(g, MinorModel::Kind::K33).has_value();
            CHECK(t == e);
            CHECK(t == m);
        }
    }
}

TEST_CASE("verify_minor holds whenever brute_force_minor returns a model") {
    for (int seed = 0; seed < 20; ++seed) {
        Graph g = gen_gnm(8, 14 + (seed % 6), 1000 + seed);
        for (auto kind : {MinorModel::Kind::K5, MinorModel::Kind::K33}) {
            auto m = brute_force_minor(g, kind);
            if (m) CHECK(verify_minor(g, *m));
        }
    }
}
