#include "planar/embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace planar {

namespace {

NonPlanarEvidence::Context context_of(const Graph &g) {
    NonPlanarEvidence::Context ctx;
    ctx.n = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e)
        ctx.edges.push_back({g.edge(e).u, g.edge(e).v, e});
    return ctx;
}

Graph graph_of_context(const NonPlanarEvidence::Context &ctx) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto &e : ctx.edges) pairs.emplace_back(e[0], e[1]);
    return Graph::build(ctx.n, pairs);
}

} // namespace

bool NonPlanarEvidence::validate() const {
    Graph g;
    try {
        g = graph_of_context(context);
    } catch (const std::exception &) {
        return false;
    }
    switch (reason) {
    case Reason::NoFundamentalFace: {
        if (!g.connected()) return false;
        SpanningTree t = spanning_tree(g, 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (t.is_tree_edge[e]) continue;
            CycleFlags f = classify_cycle(g, fundamental_cycle(g, t, e));
            if (f.induced && f.nonseparating) return false;
        }
        return true;
    }
    case Reason::NonbipartiteConflict: {
        if (cycle.size() < 3 || odd_walk.empty() || odd_walk.size() % 2 == 0) return false;
        Cycle c;
        try {
            c = cycle_from_vertices(g, cycle);
        } catch (const std::exception &) {
            return false;
        }
        auto bridges = bridges_of_cycle(g, c);
        ConflictGraph h = conflict_graph_of_bridges(bridges, c);
        int len = static_cast<int>(odd_walk.size());
        for (int i = 0; i < len; ++i) {
            int a = odd_walk[i], b = odd_walk[(i + 1) % len];
            if (a < 0 || a >= h.node_count || !h.adjacent(a, b)) return false;
        }
        return true;
    }
    case Reason::FaceCheckFailed: {
        auto as_set = [&](const std::vector<int> &ids) {
            EdgeSet s(g.edge_count());
            for (int e : ids) s.set(e);
            return s;
        };
        switch (defect) {
        case FaceDefect::EdgeCountWrong: {
            int e = g.find_edge(offending_edge[0], offending_edge[1]);
            if (e < 0) return false;
            int cnt = 0;
            for (const auto &f : faces)
                if (as_set(f).test(e)) ++cnt;
            return cnt != 2;
        }
        case FaceDefect::NotACycle:
            return faces.size() == 1 && !cycle_from_edge_set(g, as_set(faces[0])).has_value();
        case FaceDefect::NotInduced: {
            if (faces.size() != 1) return false;
            auto c = cycle_from_edge_set(g, as_set(faces[0]));
            return c.has_value() && !classify_cycle(g, *c).induced;
        }
        case FaceDefect::Separating: {
            if (faces.size() != 1) return false;
            auto c = cycle_from_edge_set(g, as_set(faces[0]));
            return c.has_value() && !classify_cycle(g, *c).nonseparating;
        }
        case FaceDefect::NotOrientable:
        case FaceDefect::EulerViolated: {
            std::vector<std::vector<int>> walks;
            for (const auto &f : faces) {
                auto c = cycle_from_edge_set(g, as_set(f));
                if (!c) return false;
                walks.push_back(c->vertices);
            }
            try {
                PlanarEmbedding pe = faces_to_rotation(g, walks);
                if (defect == FaceDefect::NotOrientable) return false;
                return static_cast<int>(pe.faces.size()) != g.edge_count() - g.vertex_count() + 2;
            } catch (const std::invalid_argument &) {
                return defect == FaceDefect::NotOrientable;
            }
        }
        case FaceDefect::None:
            return false;
        }
        return false;
    }
    }
    return false;
}

std::optional<int> find_fundamental_face(const Graph &g, const SpanningTree &t) {
    for (int e = 0; e < g.edge_count(); ++e) {
        if (t.is_tree_edge[e]) continue;
        CycleFlags f = classify_cycle(g, fundamental_cycle(g, t, e));
        if (f.induced && f.nonseparating) return e;
    }
    return std::nullopt;
}

bool EnclosureRelation::precedes(int e_prime, int e) const {
    int i = nt_index[e_prime], j = nt_index[e];
    if (i < 0 || j < 0) return false;
    return pred[j].test(i);
}

std::vector<std::pair<int, int>> EnclosureRelation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t j = 0; j < non_tree.size(); ++j)
        pred[j].for_each([&](int i) { out.emplace_back(non_tree[i], non_tree[j]); });
    return out;
}

std::variant<EnclosureRelation, NonPlanarEvidence> enclosure(const Graph &g,
                                                             const SpanningTree &t, int e0) {
    if (e0 < 0 || e0 >= g.edge_count() || t.is_tree_edge[e0])
        throw std::invalid_argument("anchor must be a non-tree edge");

    EnclosureRelation rel;
    rel.anchor = e0;
    rel.nt_index.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!t.is_tree_edge[e]) {
            rel.nt_index[e] = static_cast<int>(rel.non_tree.size());
            rel.non_tree.push_back(e);
        }
    int k = static_cast<int>(rel.non_tree.size());
    rel.cycles.reserve(k);
    for (int e : rel.non_tree) rel.cycles.push_back(fundamental_cycle(g, t, e));
    rel.pred.assign(k, EdgeSet(k));

    std::vector<int> bridge_of(g.edge_count(), -1);
    for (int j = 0; j < k; ++j) {
        int e = rel.non_tree[j];
        if (e == e0) continue;
        const Cycle &c = rel.cycles[j];
        auto bridges = bridges_of_cycle(g, c);
        for (std::size_t b = 0; b < bridges.size(); ++b)
            bridges[b].edges.for_each([&](int id) { bridge_of[id] = static_cast<int>(b); });
        ConflictGraph h = conflict_graph_of_bridges(bridges, c);
        int anchor_bridge = bridge_of[e0];
        if (anchor_bridge < 0) throw std::logic_error("anchor edge lies on a fundamental cycle");
        auto colored = two_color(h, anchor_bridge);
        if (std::holds_alternative<OddCycleWitness>(colored)) {
            NonPlanarEvidence ev;
            ev.reason = NonPlanarEvidence::Reason::NonbipartiteConflict;
            ev.context = context_of(g);
            ev.cycle = c.vertices;
            ev.odd_walk = std::get<OddCycleWitness>(colored).nodes;
            ev.detail = "non-bipartite conflict graph of a fundamental cycle";
            return ev;
        }
        const auto &color = std::get<Coloring>(colored).color;
        for (int i = 0; i < k; ++i) {
            int ep = rel.non_tree[i];
            if (ep == e) continue; // e itself lies on C(e)
            if (color[bridge_of[ep]] == 1) rel.pred[j].set(i);
        }
    }
    return rel;
}

FaceBasis face_basis(const Graph &g, const EnclosureRelation &rel) {
    int k = static_cast<int>(rel.non_tree.size());
    int m = g.edge_count();

    // succ[i]: indices j with i in pred[j]; used for the immediate-predecessor
    // test "no e'' with e' < e'' < e".
    std::vector<EdgeSet> succ(k, EdgeSet(k));
    for (int j = 0; j < k; ++j)
        rel.pred[j].for_each([&](int i) { succ[i].set(j); });

    std::vector<int> depth(k);
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) {
        depth[i] = rel.pred[i].count();
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });

    FaceBasis fb;
    EdgeSet total(m);
    for (int j = 0; j < k; ++j) {
        int e = rel.non_tree[j];
        if (e == rel.anchor) continue;

        // Greedy scan in decreasing enclosure depth, then validate each taken
        // element against the definition; recompute directly on any mismatch.
        std::vector<int> P;
        EdgeSet mark = rel.pred[j];
        for (int i : order) {
            if (!mark.test(i)) continue;
            P.push_back(i);
            mark.subtract(rel.pred[i]);
            mark.reset(i);
        }
        bool ok = true;
        for (int i : P)
            if (succ[i].intersects(rel.pred[j])) {
                ok = false;
                break;
            }
        if (!ok) {
            P.clear();
            rel.pred[j].for_each([&](int i) {
                if (!succ[i].intersects(rel.pred[j])) P.push_back(i);
            });
        }

        FaceBasis::Entry entry;
        entry.label = FaceBasis::Entry::Label::ByEdge;
        entry.edge = e;
        entry.face = rel.cycles[j].edges;
        for (int i : P) {
            entry.face ^= rel.cycles[i].edges;
            entry.immediate_pred.push_back(rel.non_tree[i]);
        }
        std::sort(entry.immediate_pred.begin(), entry.immediate_pred.end());
        total ^= entry.face;
        fb.entries.push_back(std::move(entry));
    }

    FaceBasis::Entry ext;
    ext.label = FaceBasis::Entry::Label::External;
    ext.edge = rel.anchor;
    ext.face = rel.cycles[rel.nt_index[rel.anchor]].edges;
    total ^= ext.face;
    fb.entries.push_back(std::move(ext));

    // Each edge lies on two faces, so the family sums to zero over GF(2); the
    // complement face is the sum of all other candidates.
    FaceBasis::Entry comp;
    comp.label = FaceBasis::Entry::Label::Complement;
    comp.face = total;
    fb.entries.push_back(std::move(comp));
    return fb;
}

std::optional<NonPlanarEvidence> verify_face_family(const Graph &g, const FaceBasis &fb,
                                                    bool strict) {
    auto make_ev = [&](NonPlanarEvidence::FaceDefect defect, const EdgeSet &face,
                       const std::string &what) {
        NonPlanarEvidence ev;
        ev.reason = NonPlanarEvidence::Reason::FaceCheckFailed;
        ev.defect = defect;
        ev.context = context_of(g);
        ev.faces.push_back(face.ids());
        ev.detail = what;
        return ev;
    };

    std::vector<int> cover(g.edge_count(), 0);
    for (const auto &entry : fb.entries)
        entry.face.for_each([&](int e) { ++cover[e]; });
    for (int e = 0; e < g.edge_count(); ++e)
        if (cover[e] != 2) {
            NonPlanarEvidence ev;
            ev.reason = NonPlanarEvidence::Reason::FaceCheckFailed;
            ev.defect = NonPlanarEvidence::FaceDefect::EdgeCountWrong;
            ev.context = context_of(g);
            ev.offending_edge = {g.edge(e).u, g.edge(e).v};
            for (const auto &entry : fb.entries) ev.faces.push_back(entry.face.ids());
            ev.detail = "edge lies on " + std::to_string(cover[e]) + " candidate faces";
            return ev;
        }

    std::vector<std::optional<Cycle>> cycles;
    for (const auto &entry : fb.entries) {
        auto c = cycle_from_edge_set(g, entry.face);
        if (!c)
            return make_ev(NonPlanarEvidence::FaceDefect::NotACycle, entry.face,
                           "candidate face is not a single simple cycle");
        cycles.push_back(c);
    }

    if (strict) {
        for (std::size_t i = 0; i < fb.entries.size(); ++i) {
            CycleFlags f = classify_cycle(g, *cycles[i]);
            if (!f.induced)
                return make_ev(NonPlanarEvidence::FaceDefect::NotInduced, fb.entries[i].face,
                               "candidate face has a chord");
            if (!f.nonseparating)
                return make_ev(NonPlanarEvidence::FaceDefect::Separating, fb.entries[i].face,
                               "candidate face separates the graph");
        }
    }
    return std::nullopt;
}

PlanarEmbedding faces_to_rotation(const Graph &g, const std::vector<std::vector<int>> &walks) {
    int m = g.edge_count();

    // Each walk as an edge sequence; every edge must be used exactly twice.
    struct Slot {
        int face, index;
    };
    std::vector<std::vector<int>> walk_edges(walks.size());
    std::vector<std::vector<Slot>> uses(m);
    for (std::size_t f = 0; f < walks.size(); ++f) {
        const auto &w = walks[f];
        if (w.size() < 2) throw std::invalid_argument("face walk too short");
        for (std::size_t i = 0; i < w.size(); ++i) {
            int e = g.find_edge(w[i], w[(i + 1) % w.size()]);
            if (e < 0) throw std::invalid_argument("face walk uses a non-edge");
            walk_edges[f].push_back(e);
            uses[e].push_back({static_cast<int>(f), static_cast<int>(i)});
        }
    }
    for (int e = 0; e < m; ++e)
        if (uses[e].size() != 2)
            throw std::invalid_argument("every edge must lie on exactly two face walks");

    // Orient the walks so each edge is traversed once per direction: BFS over
    // the face adjacency with parity constraints.
    std::vector<int> flip(walks.size(), -1);
    for (std::size_t f0 = 0; f0 < walks.size(); ++f0) {
        if (flip[f0] >= 0) continue;
        flip[f0] = 0;
        std::vector<int> queue = {static_cast<int>(f0)};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int f = queue[qi];
            for (std::size_t i = 0; i < walk_edges[f].size(); ++i) {
                int e = walk_edges[f][i];
                const Slot &a = uses[e][0];
                const Slot &b = uses[e][1];
                const Slot &other = (a.face == f && a.index == static_cast<int>(i)) ? b : a;
                // direction of e in each use: true if traversed u->v
                auto dir = [&](const Slot &s) {
                    const auto &w = walks[s.face];
                    int tail = w[s.index];
                    return tail == g.edge(walk_edges[s.face][s.index]).u;
                };
                int need = (dir({f, static_cast<int>(i)}) == dir(other)) ? 1 - flip[f] : flip[f];
                if (other.face == f && other.index == static_cast<int>(i)) continue;
                if (flip[other.face] < 0) {
                    flip[other.face] = need;
                    queue.push_back(other.face);
                } else if (flip[other.face] != need) {
                    if (other.face == f) {
                        // An edge used twice by one face must appear once per
                        // direction already.
                        if (dir({f, static_cast<int>(i)}) == dir(other))
                            throw std::invalid_argument("face family is not orientable");
                    } else {
                        throw std::invalid_argument("face family is not orientable");
                    }
                }
            }
        }
    }

    // Successor map per vertex: arriving along e, leave along succ.
    std::vector<std::map<int, int>> succ(g.vertex_count());
    for (std::size_t f = 0; f < walks.size(); ++f) {
        int len = static_cast<int>(walks[f].size());
        for (int i = 0; i < len; ++i) {
            // dart i of face f goes tail->head; with flip, reverse it.
            int tail = walks[f][i], head = walks[f][(i + 1) % len];
            int e_in = walk_edges[f][i];
            int e_out = walk_edges[f][(i + 1) % len];
            if (!flip[f]) {
                // arrive at head via e_in, leave via e_out
                if (!succ[head].emplace(e_in, e_out).second)
                    throw std::invalid_argument("angle adjacency conflict at a vertex");
            } else {
                // reversed: arrive at tail via e_out? walk reversed: dart head->tail,
                // so at tail we arrive via e_in reversed order: leave via previous edge
                if (!succ[tail].emplace(e_in, walk_edges[f][(i - 1 + len) % len]).second)
                    throw std::invalid_argument("angle adjacency conflict at a vertex");
            }
        }
    }

    PlanarEmbedding pe;
    pe.rotation.assign(g.vertex_count(), {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (succ[v].empty()) {
            if (g.degree(v) != 0)
                throw std::invalid_argument("vertex missing from all face walks");
            continue;
        }
        if (static_cast<int>(succ[v].size()) != g.degree(v))
            throw std::invalid_argument("angle adjacency misses an incidence");
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            pe.rotation[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) throw std::invalid_argument("broken angle cycle");
            cur = it->second;
        } while (cur != start && static_cast<int>(pe.rotation[v].size()) <= g.degree(v));
        if (cur != start || static_cast<int>(pe.rotation[v].size()) != g.degree(v))
            throw std::invalid_argument("angle adjacency does not form one cycle per vertex");
    }

    pe.faces = trace_faces(g, pe.rotation);
    pe.external = 0;
    return pe;
}

namespace {

PlanarEmbedding trivial_embedding(const Graph &g) {
    PlanarEmbedding pe;
    pe.rotation.assign(g.vertex_count(), {});
    if (g.edge_count() == 1) {
        pe.rotation[g.edge(0).u] = {0};
        pe.rotation[g.edge(0).v] = {0};
    }
    pe.faces = trace_faces(g, pe.rotation);
    pe.external = 0;
    return pe;
}

bool graph_is_cycle(const Graph &g) {
    if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return g.connected();
}

PlanarEmbedding cycle_embedding(const Graph &g) {
    PlanarEmbedding pe;
    pe.rotation.assign(g.vertex_count(), {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        pe.rotation[v] = {g.incident(v)[0], g.incident(v)[1]};
    }
    pe.faces = trace_faces(g, pe.rotation);
    pe.external = 0;
    return pe;
}

} // namespace

EmbedResult embed_triconnected(const Graph &g, bool strict) {
    if (g.vertex_count() <= 2 || g.edge_count() <= 1) return trivial_embedding(g);
    if (!g.connected()) throw std::invalid_argument("embed_triconnected requires a connected graph");
    if (graph_is_cycle(g)) return cycle_embedding(g);

    SpanningTree t = spanning_tree(g, 0);
    auto e0 = find_fundamental_face(g, t);
    if (!e0) {
        NonPlanarEvidence ev;
        ev.reason = NonPlanarEvidence::Reason::NoFundamentalFace;
        ev.context = context_of(g);
        ev.detail = "no fundamental cycle is induced and non-separating";
        return ev;
    }

    auto rel_or = enclosure(g, t, *e0);
    if (std::holds_alternative<NonPlanarEvidence>(rel_or))
        return std::get<NonPlanarEvidence>(rel_or);
    const auto &rel = std::get<EnclosureRelation>(rel_or);

    FaceBasis fb = face_basis(g, rel);
    if (auto bad = verify_face_family(g, fb, strict)) return *bad;

    std::vector<std::vector<int>> walks;
    for (const auto &entry : fb.entries) {
        auto c = cycle_from_edge_set(g, entry.face);
        if (!c) throw std::logic_error("verified candidate face failed to trace");
        walks.push_back(c->vertices);
    }

    PlanarEmbedding pe;
    try {
        pe = faces_to_rotation(g, walks);
    } catch (const std::invalid_argument &ex) {
        NonPlanarEvidence ev;
        ev.reason = NonPlanarEvidence::Reason::FaceCheckFailed;
        ev.defect = NonPlanarEvidence::FaceDefect::NotOrientable;
        ev.context = context_of(g);
        for (const auto &entry : fb.entries) ev.faces.push_back(entry.face.ids());
        ev.detail = std::string("face family does not assemble into a rotation: ") + ex.what();
        return ev;
    }

    // Euler check; a failure here means the candidate family was consistent
    // but not planar, which strict verification should have caught.
    int expect = g.edge_count() - g.vertex_count() + 2;
    if (static_cast<int>(pe.faces.size()) != expect) {
        NonPlanarEvidence ev;
        ev.reason = NonPlanarEvidence::Reason::FaceCheckFailed;
        ev.defect = NonPlanarEvidence::FaceDefect::EulerViolated;
        ev.context = context_of(g);
        for (const auto &entry : fb.entries) ev.faces.push_back(entry.face.ids());
        ev.detail = "rotation traces " + std::to_string(pe.faces.size()) + " faces, expected " +
                    std::to_string(expect);
        return ev;
    }

    // External face: the traced face matching C(e0).
    const EdgeSet &ext = rel.cycles[rel.nt_index[rel.anchor]].edges;
    for (std::size_t f = 0; f < pe.faces.size(); ++f) {
        EdgeSet fs(g.edge_count());
        const auto &w = pe.faces[f];
        for (std::size_t i = 0; i < w.size(); ++i) fs.set(g.find_edge(w[i], w[(i + 1) % w.size()]));
        if (fs == ext) {
            pe.external = static_cast<int>(f);
            break;
        }
    }
    return pe;
}

namespace {

// Maps a separation-tree component onto a standalone Graph whose edge ids are
// the component edge indices.
Graph component_graph(const SepComponent &comp, std::map<int, int> &local_of) {
    local_of.clear();
    for (std::size_t i = 0; i < comp.vertices.size(); ++i)
        local_of[comp.vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (const auto &e : comp.edges) pairs.emplace_back(local_of[e.u], local_of[e.v]);
    return Graph::build(static_cast<int>(comp.vertices.size()), pairs);
}

// Annotates component evidence with original ids: the payload stays in
// context-local coordinates (so validate() still works), the third edge field
// records the original edge id (-1 virtual) and vertex_map the original
// vertex ids.
NonPlanarEvidence lift_component_evidence(const SepComponent &comp, NonPlanarEvidence ev) {
    ev.vertex_map = comp.vertices;
    for (std::size_t i = 0; i < comp.edges.size(); ++i)
        ev.context.edges[i][2] = comp.edges[i].graph_edge;
    return ev;
}

} // namespace

EmbedResult embed(const Graph &g, bool strict) {
    BlockCutTree bct = blocks(g);
    std::vector<PlanarEmbedding> block_embs;
    for (std::size_t b = 0; b < bct.block_edges.size(); ++b) {
        const auto &bedges = bct.block_edges[b];
        const auto &bverts = bct.block_vertices[b];
        PlanarEmbedding bemb;
        bemb.rotation.assign(g.vertex_count(), {});
        if (bedges.size() == 1) {
            int e = bedges[0];
            bemb.rotation[g.edge(e).u] = {e};
            bemb.rotation[g.edge(e).v] = {e};
            block_embs.push_back(std::move(bemb));
            continue;
        }
        bool cycle_block = true;
        std::map<int, std::vector<int>> deg;
        for (int e : bedges) {
            deg[g.edge(e).u].push_back(e);
            deg[g.edge(e).v].push_back(e);
        }
        for (auto &[v, es] : deg)
            if (es.size() != 2) cycle_block = false;
        if (cycle_block && bedges.size() == bverts.size()) {
            for (auto &[v, es] : deg) bemb.rotation[v] = es;
            block_embs.push_back(std::move(bemb));
            continue;
        }

        // General biconnected block: split into triconnected components.
        std::map<int, int> to_local;
        for (std::size_t i = 0; i < bverts.size(); ++i) to_local[bverts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> lpairs;
        for (int e : bedges) lpairs.emplace_back(to_local[g.edge(e).u], to_local[g.edge(e).v]);
        Graph lb = Graph::build(static_cast<int>(bverts.size()), lpairs);
        SeparationTree st = triconnected_components(lb);

        std::vector<ComponentEmbedding> cembs;
        for (const auto &comp : st.components) {
            if (comp.type == 'S') {
                cembs.push_back(embed_cycle_component(comp));
            } else if (comp.type == 'P') {
                cembs.push_back(embed_bond_component(comp));
            } else {
                std::map<int, int> lo;
                Graph cg = component_graph(comp, lo);
                EmbedResult res = embed_triconnected(cg, strict);
                if (std::holds_alternative<NonPlanarEvidence>(res)) {
                    // Component vertices are block-local; map to global ids.
                    SepComponent lifted = comp;
                    for (auto &v : lifted.vertices) v = bverts[v];
                    for (auto &e : lifted.edges)
                        if (e.graph_edge >= 0) e.graph_edge = bedges[e.graph_edge];
                    return lift_component_evidence(lifted, std::get<NonPlanarEvidence>(res));
                }
                ComponentEmbedding ce;
                ce.rotation = std::get<PlanarEmbedding>(res).rotation;
                cembs.push_back(std::move(ce));
            }
        }
        PlanarEmbedding lemb = compose_triconnected(lb, st, cembs);
        for (std::size_t lv = 0; lv < bverts.size(); ++lv) {
            auto &row = bemb.rotation[bverts[lv]];
            for (int le : lemb.rotation[lv]) row.push_back(bedges[le]);
        }
        block_embs.push_back(std::move(bemb));
    }

    PlanarEmbedding pe = compose_blocks(g, bct, block_embs);

    // Euler per connected component: F == m - n + 2c in total.
    int comps = static_cast<int>(components(g, [&] {
                                     std::vector<int> all(g.vertex_count());
                                     std::iota(all.begin(), all.end(), 0);
                                     return all;
                                 }()).size());
    int expect = g.edge_count() - g.vertex_count() + 2 * comps;
    if (static_cast<int>(pe.faces.size()) != expect)
        throw std::logic_error("composed embedding violates Euler's formula");
    return pe;
}

} // namespace planar
