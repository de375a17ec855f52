#include "planar/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <stdexcept>

namespace planar {

namespace {

// Iterative lowpoint DFS. Returns articulation points of g with `skip`
// removed; component_count counts the components of g - skip.
std::pair<std::vector<int>, int> articulation_masked(const Graph &g, int skip) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_art(n, 0);
    int timer = 0, comps = 0;

    std::vector<std::pair<int, int>> stack; // (vertex, incident index)
    for (int s = 0; s < n; ++s) {
        if (s == skip || disc[s] >= 0) continue;
        ++comps;
        int root_children = 0;
        disc[s] = low[s] = timer++;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto &[v, i] = stack.back();
            if (i < static_cast<int>(g.incident(v).size())) {
                int e = g.incident(v)[i++];
                int w = g.other_end(e, v);
                if (w == skip || w == parent[v]) continue;
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == s) ++root_children;
                    stack.push_back({w, 0});
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (p != s && low[v] >= disc[p]) is_art[p] = 1;
                }
            }
        }
        if (root_children > 1) is_art[s] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_art[v]) out.push_back(v);
    return {out, comps};
}

} // namespace

std::vector<int> articulation_points(const Graph &g) {
    return articulation_masked(g, -1).first;
}

std::optional<std::pair<int, int>> find_separating_pair(const Graph &g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        auto pts = articulation_masked(g, u).first;
        if (!pts.empty()) return std::make_pair(std::min(u, pts[0]), std::max(u, pts[0]));
    }
    return std::nullopt;
}

BlockCutTree blocks(const Graph &g) {
    int n = g.vertex_count();
    BlockCutTree out;
    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
    std::vector<char> is_art(n, 0);
    std::vector<int> edge_stack;
    std::vector<char> edge_seen(g.edge_count(), 0);
    int timer = 0;

    auto pop_block = [&](int until_edge) {
        std::vector<int> block;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.block_edges.push_back(std::move(block));
    };

    std::vector<std::pair<int, int>> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        int root_children = 0;
        disc[s] = low[s] = timer++;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto &[v, i] = stack.back();
            if (i < static_cast<int>(g.incident(v).size())) {
                int e = g.incident(v)[i++];
                int w = g.other_end(e, v);
                if (edge_seen[e]) continue;
                edge_seen[e] = 1;
                edge_stack.push_back(e);
                if (disc[w] < 0) {
                    parent_edge[w] = e;
                    disc[w] = low[w] = timer++;
                    if (v == s) ++root_children;
                    stack.push_back({w, 0});
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        pop_block(parent_edge[v]);
                        if (p != s) is_art[p] = 1;
                    }
                }
            }
        }
        if (root_children > 1) is_art[s] = 1;
    }

    // Deterministic block order and derived fields.
    std::sort(out.block_edges.begin(), out.block_edges.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    for (const auto &be : out.block_edges) {
        std::vector<int> vs;
        for (int e : be) {
            vs.push_back(g.edge(e).u);
            vs.push_back(g.edge(e).v);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.block_vertices.push_back(std::move(vs));
    }
    for (int v = 0; v < n; ++v)
        if (is_art[v]) out.cut_vertices.push_back(v);
    for (int cv : out.cut_vertices) {
        std::vector<int> bl;
        for (std::size_t b = 0; b < out.block_vertices.size(); ++b)
            if (std::binary_search(out.block_vertices[b].begin(), out.block_vertices[b].end(), cv))
                bl.push_back(static_cast<int>(b));
        out.blocks_of_cut.push_back(std::move(bl));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Triconnected components
// ---------------------------------------------------------------------------

namespace {

struct MEdge {
    int u, v;
    int graph_edge; // -1 for virtual
    int virt_id;    // -1 for real
};

struct MGraph {
    std::vector<int> vertices;
    std::vector<MEdge> edges;
};

struct PendingPair {
    int virt_a, virt_b;
    int u, v;
};

struct Splitter {
    std::vector<std::pair<char, MGraph>> done; // (type, component)
    std::vector<PendingPair> pairs;
    int next_virt = 0;

    int fresh(int u, int v, MGraph &into) {
        into.edges.push_back({u, v, -1, next_virt});
        return next_virt++;
    }

    void split(MGraph h);
};

bool is_cycle_graph(const MGraph &h) {
    std::map<int, int> deg;
    for (int v : h.vertices) deg[v] = 0;
    for (const auto &e : h.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    if (h.edges.size() != h.vertices.size()) return false;
    for (auto &[v, d] : deg)
        if (d != 2) return false;
    // connectivity
    std::map<int, std::vector<int>> adj;
    for (const auto &e : h.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::map<int, char> seen;
    std::vector<int> st = {h.vertices[0]};
    seen[h.vertices[0]] = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                st.push_back(w);
            }
    }
    return seen.size() == h.vertices.size();
}

void Splitter::split(MGraph h) {
    // Extract parallel groups into bond components until simple.
    while (true) {
        if (h.vertices.size() == 2) {
            done.push_back({'P', std::move(h)});
            return;
        }
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            auto &e = h.edges[i];
            groups[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(static_cast<int>(i));
        }
        const std::pair<int, int> *multi = nullptr;
        const std::vector<int> *idxs = nullptr;
        for (auto &[uv, is] : groups)
            if (is.size() >= 2) {
                multi = &uv;
                idxs = &is;
                break;
            }
        if (!multi) break;
        int u = multi->first, v = multi->second;
        MGraph bond;
        bond.vertices = {u, v};
        for (int i : *idxs) bond.edges.push_back(h.edges[i]);
        int b_in_bond = fresh(u, v, bond);
        MGraph rest;
        rest.vertices = h.vertices;
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            if (std::find(idxs->begin(), idxs->end(), static_cast<int>(i)) == idxs->end())
                rest.edges.push_back(h.edges[i]);
        int b_in_rest = fresh(u, v, rest);
        pairs.push_back({b_in_bond, b_in_rest, u, v});
        done.push_back({'P', std::move(bond)});
        h = std::move(rest);
    }

    if (is_cycle_graph(h)) {
        done.push_back({'S', std::move(h)});
        return;
    }

    // Simple, not a cycle: look for a separating pair on a local copy.
    std::vector<int> local_of(h.vertices.size());
    std::map<int, int> to_local;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) to_local[h.vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> lpairs;
    for (const auto &e : h.edges) lpairs.emplace_back(to_local[e.u], to_local[e.v]);
    Graph lg = Graph::build(static_cast<int>(h.vertices.size()), lpairs);
    auto sep = find_separating_pair(lg);
    if (!sep) {
        done.push_back({'R', std::move(h)});
        return;
    }
    int a = h.vertices[sep->first], b = h.vertices[sep->second];

    // Components of h - {a,b}.
    std::vector<int> keep;
    for (int lv = 0; lv < lg.vertex_count(); ++lv)
        if (h.vertices[lv] != a && h.vertices[lv] != b) keep.push_back(lv);
    auto comps = components(lg, keep);

    std::vector<int> direct; // indices of a-b edges in h
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        auto &e = h.edges[i];
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) direct.push_back(static_cast<int>(i));
    }

    std::vector<MGraph> pieces;
    std::vector<int> piece_virts;
    for (const auto &comp : comps) {
        std::vector<char> in_piece(lg.vertex_count(), 0);
        for (int lv : comp) in_piece[lv] = 1;
        MGraph piece;
        for (int lv : comp) piece.vertices.push_back(h.vertices[lv]);
        piece.vertices.push_back(a);
        piece.vertices.push_back(b);
        std::sort(piece.vertices.begin(), piece.vertices.end());
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            auto &e = h.edges[i];
            if (std::find(direct.begin(), direct.end(), static_cast<int>(i)) != direct.end()) continue;
            int lu = to_local[e.u], lv2 = to_local[e.v];
            bool u_in = in_piece[lu] || e.u == a || e.u == b;
            bool v_in = in_piece[lv2] || e.v == a || e.v == b;
            bool touches = in_piece[lu] || in_piece[lv2];
            if (u_in && v_in && touches) piece.edges.push_back(e);
        }
        piece_virts.push_back(fresh(a, b, piece));
        pieces.push_back(std::move(piece));
    }

    if (pieces.size() == 2 && direct.empty()) {
        pairs.push_back({piece_virts[0], piece_virts[1], a, b});
    } else {
        MGraph bond;
        bond.vertices = {a, b};
        for (int i : direct) bond.edges.push_back(h.edges[i]);
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            int twin = fresh(a, b, bond);
            pairs.push_back({piece_virts[k], twin, a, b});
        }
        done.push_back({'P', std::move(bond)});
    }
    for (auto &piece : pieces) split(std::move(piece));
}

} // namespace

SeparationTree triconnected_components(const Graph &g) {
    if (g.vertex_count() < 3) throw std::invalid_argument("need at least 3 vertices");
    if (!g.connected() || !articulation_points(g).empty())
        throw std::invalid_argument("input graph is not biconnected");

    Splitter sp;
    MGraph whole;
    whole.vertices.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) whole.vertices[v] = v;
    for (int e = 0; e < g.edge_count(); ++e)
        whole.edges.push_back({g.edge(e).u, g.edge(e).v, e, -1});
    sp.split(std::move(whole));

    // Merge S-S and P-P components sharing a virtual pair.
    auto locate = [&](int virt) -> std::pair<int, int> {
        for (std::size_t c = 0; c < sp.done.size(); ++c)
            for (std::size_t i = 0; i < sp.done[c].second.edges.size(); ++i)
                if (sp.done[c].second.edges[i].virt_id == virt)
                    return {static_cast<int>(c), static_cast<int>(i)};
        throw std::logic_error("virtual edge not found");
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < sp.pairs.size(); ++p) {
            auto [ca, ia] = locate(sp.pairs[p].virt_a);
            auto [cb, ib] = locate(sp.pairs[p].virt_b);
            char ta = sp.done[ca].first, tb = sp.done[cb].first;
            if (ca == cb) throw std::logic_error("virtual pair inside one component");
            if (!((ta == 'S' && tb == 'S') || (ta == 'P' && tb == 'P'))) continue;
            MGraph merged;
            auto &ga = sp.done[ca].second, &gb = sp.done[cb].second;
            for (std::size_t i = 0; i < ga.edges.size(); ++i)
                if (static_cast<int>(i) != ia) merged.edges.push_back(ga.edges[i]);
            for (std::size_t i = 0; i < gb.edges.size(); ++i)
                if (static_cast<int>(i) != ib) merged.edges.push_back(gb.edges[i]);
            merged.vertices = ga.vertices;
            merged.vertices.insert(merged.vertices.end(), gb.vertices.begin(), gb.vertices.end());
            std::sort(merged.vertices.begin(), merged.vertices.end());
            merged.vertices.erase(std::unique(merged.vertices.begin(), merged.vertices.end()),
                                  merged.vertices.end());
            sp.done[ca].second = std::move(merged);
            sp.done.erase(sp.done.begin() + cb);
            sp.pairs.erase(sp.pairs.begin() + p);
            changed = true;
            break;
        }
    }

    // Deterministic component order.
    std::vector<int> order(sp.done.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto key = [&](int c) {
        int min_edge = INT_MAX, min_u = INT_MAX, min_v = INT_MAX;
        for (const auto &e : sp.done[c].second.edges) {
            if (e.graph_edge >= 0) min_edge = std::min(min_edge, e.graph_edge);
            min_u = std::min(min_u, std::min(e.u, e.v));
            min_v = std::min(min_v, std::max(e.u, e.v));
        }
        return std::make_tuple(min_edge, min_u, min_v);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

    SeparationTree st;
    std::map<int, std::pair<int, int>> virt_loc; // virt id -> (component, edge index)
    for (int oc : order) {
        auto &[type, mg] = sp.done[oc];
        SepComponent comp;
        comp.type = type;
        comp.vertices = mg.vertices;
        std::sort(mg.edges.begin(), mg.edges.end(), [](const MEdge &a, const MEdge &b) {
            bool va = a.graph_edge < 0, vb = b.graph_edge < 0;
            if (va != vb) return vb; // real edges first
            if (!va) return a.graph_edge < b.graph_edge;
            return a.virt_id < b.virt_id;
        });
        for (std::size_t i = 0; i < mg.edges.size(); ++i) {
            const auto &e = mg.edges[i];
            comp.edges.push_back({e.u, e.v, e.graph_edge, -1});
            if (e.virt_id >= 0)
                virt_loc[e.virt_id] = {static_cast<int>(st.components.size()),
                                       static_cast<int>(i)};
        }
        st.components.push_back(std::move(comp));
    }
    std::sort(sp.pairs.begin(), sp.pairs.end(), [&](const PendingPair &a, const PendingPair &b) {
        return virt_loc[a.virt_a] < virt_loc[b.virt_a];
    });
    for (const auto &pp : sp.pairs) {
        auto [ca, ia] = virt_loc.at(pp.virt_a);
        auto [cb, ib] = virt_loc.at(pp.virt_b);
        int pid = static_cast<int>(st.pairs.size());
        st.pairs.push_back({ca, ia, cb, ib, pp.u, pp.v});
        st.components[ca].edges[ia].pair_id = pid;
        st.components[cb].edges[ib].pair_id = pid;
    }
    return st;
}

Graph merge_separation_tree(const Graph &g, const SeparationTree &st) {
    std::vector<std::pair<int, int>> pairs(g.edge_count(), {-1, -1});
    for (const auto &comp : st.components)
        for (const auto &e : comp.edges)
            if (e.graph_edge >= 0) pairs[e.graph_edge] = {e.u, e.v};
    for (auto &[u, v] : pairs)
        if (u < 0) throw std::logic_error("separation tree lost an edge");
    return Graph::build(g.vertex_count(), pairs);
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> trace_faces(const Graph &g,
                                          const std::vector<std::vector<int>> &rotation) {
    int m = g.edge_count();
    std::vector<int> idx_at_u(m, -1), idx_at_v(m, -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 0; i < rotation[v].size(); ++i) {
            int e = rotation[v][i];
            if (g.edge(e).u == v)
                idx_at_u[e] = static_cast<int>(i);
            else
                idx_at_v[e] = static_cast<int>(i);
        }

    std::vector<std::vector<int>> faces;
    std::vector<char> dart_seen(2 * m, 0);
    // dart 2e   = u->v
    // dart 2e+1 = v->u
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (dart_seen[d0]) continue;
        std::vector<int> walk;
        int d = d0;
        while (!dart_seen[d]) {
            dart_seen[d] = 1;
            int e = d >> 1;
            int tail = (d & 1) ? g.edge(e).v : g.edge(e).u;
            int head = (d & 1) ? g.edge(e).u : g.edge(e).v;
            walk.push_back(tail);
            int j = (g.edge(e).u == head) ? idx_at_u[e] : idx_at_v[e];
            const auto &rot = rotation[head];
            int e2 = rot[(j + 1) % rot.size()];
            d = (g.edge(e2).u == head) ? 2 * e2 : 2 * e2 + 1;
        }
        faces.push_back(std::move(walk));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rotation[v].empty()) faces.push_back({v});
    return faces;
}

ComponentEmbedding embed_cycle_component(const SepComponent &c) {
    ComponentEmbedding emb;
    emb.rotation.resize(c.vertices.size());
    std::map<int, int> local;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) local[c.vertices[i]] = static_cast<int>(i);
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        emb.rotation[local[c.edges[e].u]].push_back(static_cast<int>(e));
        emb.rotation[local[c.edges[e].v]].push_back(static_cast<int>(e));
    }
    for (auto &r : emb.rotation)
        if (r.size() != 2) throw std::invalid_argument("not a cycle component");
    return emb;
}

ComponentEmbedding embed_bond_component(const SepComponent &c) {
    if (c.vertices.size() != 2) throw std::invalid_argument("not a bond component");
    ComponentEmbedding emb;
    emb.rotation.resize(2);
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        emb.rotation[0].push_back(static_cast<int>(e));
    for (int e = static_cast<int>(c.edges.size()) - 1; e >= 0; --e) emb.rotation[1].push_back(e);
    return emb;
}

PlanarEmbedding compose_triconnected(const Graph &g, const SeparationTree &st,
                                     const std::vector<ComponentEmbedding> &embeddings) {
    int nc = static_cast<int>(st.components.size());
    if (static_cast<int>(embeddings.size()) != nc)
        throw std::invalid_argument("one embedding per component required");

    // Global slot ids for component edge instances.
    std::vector<int> offset(nc + 1, 0);
    for (int c = 0; c < nc; ++c)
        offset[c + 1] = offset[c] + static_cast<int>(st.components[c].edges.size());
    auto slot = [&](int c, int e) { return offset[c] + e; };

    // Validate component rotations and convert to slots.
    std::vector<std::vector<std::vector<int>>> rot_slots(nc);
    for (int c = 0; c < nc; ++c) {
        const auto &comp = st.components[c];
        const auto &emb = embeddings[c];
        if (emb.rotation.size() != comp.vertices.size())
            throw std::invalid_argument("component embedding shape mismatch");
        std::vector<int> count(comp.edges.size(), 0);
        rot_slots[c].resize(comp.vertices.size());
        for (std::size_t lv = 0; lv < comp.vertices.size(); ++lv) {
            int v = comp.vertices[lv];
            for (int le : emb.rotation[lv]) {
                if (le < 0 || le >= static_cast<int>(comp.edges.size()))
                    throw std::invalid_argument("component edge index out of range");
                const auto &ce = comp.edges[le];
                if (ce.u != v && ce.v != v)
                    throw std::invalid_argument("rotation lists a non-incident edge");
                ++count[le];
                rot_slots[c][lv].push_back(slot(c, le));
            }
        }
        for (int cnt : count)
            if (cnt != 2) throw std::invalid_argument("component rotation misses an edge");
    }

    // BFS over the pair tree from component 0.
    std::vector<std::vector<int>> tree(nc); // pair ids per component
    for (std::size_t p = 0; p < st.pairs.size(); ++p) {
        tree[st.pairs[p].comp_a].push_back(static_cast<int>(p));
        tree[st.pairs[p].comp_b].push_back(static_cast<int>(p));
    }

    std::vector<std::vector<int>> cur(g.vertex_count()); // vertex -> slot list
    std::vector<char> merged(nc, 0);
    merged[0] = 1;
    for (std::size_t lv = 0; lv < st.components[0].vertices.size(); ++lv)
        cur[st.components[0].vertices[lv]] = rot_slots[0][lv];

    std::vector<int> queue = {0};
    std::vector<char> pair_done(st.pairs.size(), 0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int c = queue[qi];
        for (int pid : tree[c]) {
            if (pair_done[pid]) continue;
            const auto &vp = st.pairs[pid];
            int other = (vp.comp_a == c) ? vp.comp_b : vp.comp_a;
            if (merged[other]) continue;
            pair_done[pid] = 1;
            merged[other] = 1;
            queue.push_back(other);

            int s_cur = (vp.comp_a == c) ? slot(vp.comp_a, vp.edge_a) : slot(vp.comp_b, vp.edge_b);
            int s_new = (vp.comp_a == c) ? slot(vp.comp_b, vp.edge_b) : slot(vp.comp_a, vp.edge_a);
            const auto &compB = st.components[other];

            std::map<int, int> localB;
            for (std::size_t lv = 0; lv < compB.vertices.size(); ++lv)
                localB[compB.vertices[lv]] = static_cast<int>(lv);

            for (int w : {vp.u, vp.v}) {
                auto &host = cur[w];
                auto it = std::find(host.begin(), host.end(), s_cur);
                if (it == host.end()) throw std::logic_error("virtual slot missing during splice");
                const auto &brot = rot_slots[other][localB.at(w)];
                auto bit = std::find(brot.begin(), brot.end(), s_new);
                if (bit == brot.end()) throw std::logic_error("twin slot missing in component");
                std::vector<int> arc;
                int deg = static_cast<int>(brot.size());
                int start = static_cast<int>(bit - brot.begin());
                for (int k = 1; k < deg; ++k) arc.push_back(brot[(start + k) % deg]);
                it = host.erase(it);
                host.insert(it, arc.begin(), arc.end());
            }
            for (std::size_t lv = 0; lv < compB.vertices.size(); ++lv) {
                int w = compB.vertices[lv];
                if (w == vp.u || w == vp.v) continue;
                cur[w] = rot_slots[other][lv];
            }
        }
    }
    for (int c = 0; c < nc; ++c)
        if (!merged[c]) throw std::invalid_argument("separation tree is not connected");

    // Slots -> original edge ids.
    PlanarEmbedding pe;
    pe.rotation.assign(g.vertex_count(), {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int s : cur[v]) {
            int c = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), s) -
                                     offset.begin()) -
                    1;
            const auto &ce = st.components[c].edges[s - offset[c]];
            if (ce.graph_edge < 0) throw std::logic_error("virtual edge survived composition");
            pe.rotation[v].push_back(ce.graph_edge);
        }
    }
    pe.faces = trace_faces(g, pe.rotation);
    pe.external = 0;
    return pe;
}

PlanarEmbedding compose_blocks(const Graph &g, const BlockCutTree &bct,
                               const std::vector<PlanarEmbedding> &block_embeddings) {
    if (block_embeddings.size() != bct.block_edges.size())
        throw std::invalid_argument("one embedding per block required");
    PlanarEmbedding pe;
    pe.rotation.assign(g.vertex_count(), {});
    for (std::size_t b = 0; b < bct.block_edges.size(); ++b) {
        const auto &emb = block_embeddings[b];
        for (int v : bct.block_vertices[b]) {
            if (v >= static_cast<int>(emb.rotation.size()) || emb.rotation[v].empty())
                throw std::invalid_argument("block embedding missing a vertex rotation");
            for (int e : emb.rotation[v]) pe.rotation[v].push_back(e);
        }
    }
    pe.faces = trace_faces(g, pe.rotation);
    pe.external = 0;
    return pe;
}

} // namespace planar
