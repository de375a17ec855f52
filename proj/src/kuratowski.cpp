#include "planar/kuratowski.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "planar/oracle.hpp"

namespace planar {

namespace {

Graph prefix_graph(const Graph &g, const std::vector<int> &order, int count) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(count);
    for (int i = 0; i < count; ++i) {
        Edge e = g.edge(order[i]);
        pairs.emplace_back(e.u, e.v);
    }
    return Graph::build(g.vertex_count(), pairs);
}

} // namespace

MinimalPrefix minimal_nonplanar_prefix(const Graph &g, std::vector<int> order) {
    int m = g.edge_count();
    if (order.empty()) {
        order.resize(m);
        for (int i = 0; i < m; ++i) order[i] = i;
    }
    if (static_cast<int>(order.size()) != m)
        throw std::invalid_argument("order must be a permutation of the edge ids");
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < m; ++i)
            if (sorted[i] != i) throw std::invalid_argument("order must be a permutation");
    }
    if (is_planar_result(embed(g))) throw std::invalid_argument("graph is planar");

    // planarity of the i-edge prefix is monotone in i
    int lo = 1, hi = m; // smallest non-planar prefix size in (lo..hi]
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (is_planar_result(embed(prefix_graph(g, order, mid))))
            lo = mid + 1;
        else
            hi = mid;
    }
    MinimalPrefix mp;
    mp.prefix = prefix_graph(g, order, lo);
    mp.orig_edge.assign(order.begin(), order.begin() + lo);
    mp.culprit = lo - 1;
    mp.x = mp.prefix.edge(mp.culprit).u;
    mp.y = mp.prefix.edge(mp.culprit).v;
    return mp;
}

namespace {

// Edge-disjoint simple cycles of an even subgraph, extracted greedily in a
// deterministic order.
std::vector<Cycle> even_subgraph_cycles(const Graph &g, EdgeSet es) {
    std::vector<Cycle> out;
    std::vector<std::vector<int>> at(g.vertex_count());
    es.for_each([&](int e) {
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
    });
    auto degree = [&](int v) {
        int d = 0;
        for (int e : at[v])
            if (es.test(e)) ++d;
        return d;
    };
    while (true) {
        int start = -1;
        for (int v = 0; v < g.vertex_count() && start < 0; ++v)
            if (degree(v) > 0) start = v;
        if (start < 0) break;
        // walk until a vertex repeats, cut out that loop, put the tail back
        std::vector<int> walk = {start};
        std::vector<int> walk_edge; // edge used to reach walk[i+1]
        std::vector<int> seen_at(g.vertex_count(), -1);
        seen_at[start] = 0;
        int v = start;
        bool extracted = false;
        while (true) {
            int next_e = -1;
            for (int e : at[v])
                if (es.test(e)) {
                    next_e = e;
                    break;
                }
            if (next_e < 0) break; // cannot happen on an even subgraph
            int w = g.other_end(next_e, v);
            es.reset(next_e);
            walk_edge.push_back(next_e);
            if (seen_at[w] >= 0) {
                int cut = seen_at[w];
                std::vector<int> loop(walk.begin() + cut, walk.end());
                Cycle c;
                c.vertices = loop;
                c.edges = EdgeSet(g.edge_count());
                for (std::size_t i = 0; i < loop.size(); ++i)
                    c.edges.set(g.find_edge(loop[i], loop[(i + 1) % loop.size()]));
                if (loop.size() >= 3) out.push_back(std::move(c));
                for (int i = 0; i < cut; ++i) es.set(walk_edge[i]); // restore the tail
                extracted = true;
                break;
            }
            walk.push_back(w);
            seen_at[w] = static_cast<int>(walk.size()) - 1;
            v = w;
        }
        if (!extracted) break;
    }
    return out;
}

} // namespace

WitnessCycle witness_cycle(const MinimalPrefix &mp) {
    const Graph &gp = mp.prefix;
    int x = mp.x, y = mp.y;

    // embed G' minus the culprit (planar by minimality)
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < gp.edge_count(); ++e)
        if (e != mp.culprit) pairs.emplace_back(gp.edge(e).u, gp.edge(e).v);
    Graph h = Graph::build(gp.vertex_count(), pairs);
    EmbedResult er = embed(h);
    if (!is_planar_result(er)) throw std::logic_error("prefix minus culprit is not planar");
    const PlanarEmbedding &pe = std::get<PlanarEmbedding>(er);

    int nf = static_cast<int>(pe.faces.size());
    // boundary edge sets with parity (an edge walked twice cancels out)
    std::vector<EdgeSet> boundary(nf, EdgeSet(h.edge_count()));
    std::vector<char> has_x(nf, 0), has_y(nf, 0);
    for (int f = 0; f < nf; ++f) {
        const auto &w = pe.faces[f];
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == x) has_x[f] = 1;
            if (w[i] == y) has_y[f] = 1;
            if (w.size() >= 2) {
                int e = h.find_edge(w[i], w[(i + 1) % w.size()]);
                if (e >= 0) boundary[f].toggle(e);
            }
        }
    }
    // x and y can never share a face, else adding the culprit stays planar
    for (int f = 0; f < nf; ++f)
        if (has_x[f] && has_y[f])
            throw std::logic_error("culprit endpoints share a face of the prefix embedding");

    std::vector<std::vector<int>> faces_of_edge(h.edge_count());
    for (int f = 0; f < nf; ++f)
        boundary[f].for_each([&](int e) { faces_of_edge[e].push_back(f); });

    auto translate_edges = [&](const EdgeSet &in_h) {
        // h edge ids are gp edge ids shifted by the missing culprit
        EdgeSet out(gp.edge_count());
        in_h.for_each([&](int e) { out.set(e < mp.culprit ? e : e + 1); });
        return out;
    };

    // Prefer cycles passing through both culprit endpoints; when an endpoint
    // is pendant in the embedded subgraph no such cycle exists, and any cycle
    // with a non-bipartite conflict graph serves (the culprit is then inside
    // one of its component bridges).
    auto attempt = [&](bool require_xy) -> std::optional<WitnessCycle> {
        for (int fx = 0; fx < nf; ++fx) {
            if (!has_x[fx]) continue;
            for (int fy = 0; fy < nf; ++fy) {
                if (!has_y[fy]) continue;
                // BFS over faces avoiding every other face containing x or y
                std::vector<int> parent(nf, -2);
                std::vector<int> queue = {fx};
                parent[fx] = -1;
                bool reached = false;
                for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
                    int f = queue[qi];
                    std::vector<int> nbrs;
                    boundary[f].for_each([&](int e) {
                        for (int f2 : faces_of_edge[e])
                            if (f2 != f) nbrs.push_back(f2);
                    });
                    std::sort(nbrs.begin(), nbrs.end());
                    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
                    for (int f2 : nbrs) {
                        if (parent[f2] != -2) continue;
                        bool allowed = (f2 == fy) || (!has_x[f2] && !has_y[f2]);
                        if (!allowed) continue;
                        parent[f2] = f;
                        if (f2 == fy) {
                            reached = true;
                            break;
                        }
                        queue.push_back(f2);
                    }
                }
                if (!reached) continue;
                std::vector<int> path;
                for (int f = fy; f != -1; f = parent[f]) path.push_back(f);
                std::reverse(path.begin(), path.end());

                EdgeSet cyc_h(h.edge_count());
                for (int f : path) cyc_h ^= boundary[f];
                auto cyc = cycle_from_edge_set(h, cyc_h);
                if (!cyc) continue;
                if (require_xy) {
                    bool on_x = false, on_y = false;
                    for (int v : cyc->vertices) {
                        if (v == x) on_x = true;
                        if (v == y) on_y = true;
                    }
                    if (!on_x || !on_y) continue;
                }

                // lift the cycle to G' and require a non-bipartite conflict graph
                WitnessCycle wc;
                wc.gprime = gp;
                wc.x = x;
                wc.y = y;
                wc.cycle.vertices = cyc->vertices;
                wc.cycle.edges = translate_edges(cyc_h);
                wc.bridges = bridges_of_cycle(gp, wc.cycle);
                wc.h = conflict_graph_of_bridges(wc.bridges, wc.cycle);
                auto colored = two_color(wc.h, wc.h.node_count ? 0 : -1);
                if (!std::holds_alternative<OddCycleWitness>(colored)) continue;
                wc.dual_faces = path;
                return wc;
            }
        }
        return std::nullopt;
    };
    if (auto wc = attempt(true)) return *wc;
    if (auto wc = attempt(false)) return *wc;

    // Dual-cut candidates: the boundary of the face region grown from one
    // endpoint's faces, kept away from the other endpoint's faces, is an even
    // subgraph whose simple cycles separate x-faces from y-faces.
    auto try_cycle = [&](const Cycle &cand) -> std::optional<WitnessCycle> {
        WitnessCycle wc;
        wc.gprime = gp;
        wc.x = x;
        wc.y = y;
        wc.cycle.vertices = cand.vertices;
        wc.cycle.edges = translate_edges(cand.edges);
        wc.bridges = bridges_of_cycle(gp, wc.cycle);
        wc.h = conflict_graph_of_bridges(wc.bridges, wc.cycle);
        auto colored = two_color(wc.h, wc.h.node_count ? 0 : -1);
        if (!std::holds_alternative<OddCycleWitness>(colored)) return std::nullopt;
        return wc;
    };
    for (int side = 0; side < 2; ++side) {
        const auto &src = side == 0 ? has_x : has_y;
        const auto &forbid = side == 0 ? has_y : has_x;
        std::vector<char> in_region(nf, 0);
        std::vector<int> queue;
        for (int f = 0; f < nf; ++f)
            if (src[f]) {
                in_region[f] = 1;
                queue.push_back(f);
            }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int f = queue[qi];
            boundary[f].for_each([&](int e) {
                for (int f2 : faces_of_edge[e])
                    if (!in_region[f2] && !forbid[f2]) {
                        in_region[f2] = 1;
                        queue.push_back(f2);
                    }
            });
        }
        EdgeSet cut(h.edge_count());
        for (int f = 0; f < nf; ++f)
            if (in_region[f]) cut ^= boundary[f];
        for (const Cycle &cand : even_subgraph_cycles(h, cut))
            if (auto wc = try_cycle(cand)) return *wc;
    }
    throw std::logic_error("no dual path produced a witness cycle");
}

std::vector<int> induced_odd_cycle(const ConflictGraph &h) {
    int n = h.node_count;
    std::vector<int> parent(n, -1), depth(n, -1);
    std::set<std::pair<int, int>> tree_edges;
    for (int s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        std::vector<int> queue = {s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : h.adj[v])
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    tree_edges.insert({std::min(v, w), std::max(v, w)});
                    queue.push_back(w);
                }
        }
    }
    auto color = [&](int v) { return depth[v] & 1; };

    // smallest monochromatic non-tree edge
    int ea = -1, eb = -1;
    std::vector<std::pair<int, int>> hedges;
    for (const auto &e : h.edges) hedges.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(hedges.begin(), hedges.end());
    for (auto [a, b] : hedges)
        if (!tree_edges.count({a, b}) && color(a) == color(b)) {
            ea = a;
            eb = b;
            break;
        }
    if (ea < 0) throw std::invalid_argument("conflict graph is bipartite");

    auto tree_path = [&](int a, int b) {
        std::vector<int> la = {a}, lb = {b};
        int u = a, v = b;
        while (depth[u] > depth[v]) la.push_back(u = parent[u]);
        while (depth[v] > depth[u]) lb.push_back(v = parent[v]);
        while (u != v) {
            la.push_back(u = parent[u]);
            lb.push_back(v = parent[v]);
        }
        for (int i = static_cast<int>(lb.size()) - 2; i >= 0; --i) la.push_back(lb[i]);
        return la;
    };

    // shrink: replace e by a monochromatic chord of its tree cycle until all
    // chords are bichromatic
    std::vector<int> path;
    while (true) {
        path = tree_path(ea, eb);
        int len = static_cast<int>(path.size());
        std::vector<int> idx(n, -1);
        for (int i = 0; i < len; ++i) idx[path[i]] = i;
        int ca = -1, cb = -1;
        for (auto [a, b] : hedges) {
            int ia = idx[a], ib = idx[b];
            if (ia < 0 || ib < 0) continue;
            if (std::abs(ia - ib) <= 1) continue;
            if (ia == 0 && ib == len - 1) continue; // e itself
            if (color(a) == color(b)) {
                ca = a;
                cb = b;
                break;
            }
        }
        if (ca < 0) break;
        ea = std::min(ca, cb);
        eb = std::max(ca, cb);
    }

    // short-circuit walk: jump along chords as far as possible
    int len = static_cast<int>(path.size());
    std::vector<int> idx(n, -1);
    for (int i = 0; i < len; ++i) idx[path[i]] = i;
    std::vector<int> far(len, -1);
    for (auto [a, b] : hedges) {
        int ia = idx[a], ib = idx[b];
        if (ia < 0 || ib < 0) continue;
        if (std::abs(ia - ib) <= 1) continue;
        if (ia == 0 && ib == len - 1) continue;
        if (ia > ib) std::swap(ia, ib);
        far[ia] = std::max(far[ia], ib);
    }
    std::vector<int> cycle;
    int cur = 0;
    while (cur < len) {
        cycle.push_back(path[cur]);
        cur = (far[cur] > cur) ? far[cur] : cur + 1;
    }

    // verify: odd, >= 3, a genuine chordless cycle of h
    int t = static_cast<int>(cycle.size());
    if (t < 3 || t % 2 == 0) throw std::logic_error("odd cycle extraction failed (parity)");
    for (int i = 0; i < t; ++i)
        if (!h.adjacent(cycle[i], cycle[(i + 1) % t]))
            throw std::logic_error("odd cycle extraction failed (adjacency)");
    for (int i = 0; i < t; ++i)
        for (int j = i + 2; j < t; ++j) {
            if (i == 0 && j == t - 1) continue;
            if (h.adjacent(cycle[i], cycle[j]))
                throw std::logic_error("odd cycle extraction failed (chord)");
        }
    return cycle;
}

// ---------------------------------------------------------------------------
// Bridge-to-path reduction
// ---------------------------------------------------------------------------

namespace {

// positions normalized p < q; interleave needs 4 distinct, one of b inside (p,q)
bool pairs_interleave(std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first == b.first || a.first == b.second || a.second == b.first ||
        a.second == b.second)
        return false;
    auto inside = [&](int x) { return a.first < x && x < a.second; };
    return inside(b.first) != inside(b.second);
}

// BFS path from attachment u through the bridge interior to attachment v.
std::vector<int> bridge_path(const Graph &g, const Bridge &b, int u, int v) {
    if (b.kind == Bridge::Kind::Chord) return {u, v};
    std::set<int> inside(b.vertices.begin(), b.vertices.end());
    std::map<int, int> parent;
    std::vector<int> queue;
    for (int e : g.incident(u)) {
        int w = g.other_end(e, u);
        if (inside.count(w) && !parent.count(w)) {
            parent[w] = -1;
            queue.push_back(w);
        }
    }
    std::sort(queue.begin(), queue.end());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        if (g.has_edge(a, v)) {
            std::vector<int> walk = {v};
            for (int w = a; w != -1; w = parent[w]) walk.push_back(w);
            walk.push_back(u);
            std::reverse(walk.begin(), walk.end());
            return walk;
        }
        for (int e : g.incident(a)) {
            int w = g.other_end(e, a);
            if (inside.count(w) && !parent.count(w)) {
                parent[w] = a;
                queue.push_back(w);
            }
        }
    }
    throw std::logic_error("bridge path not found");
}

struct PairSearch {
    int len = 0; // odd cycle length
    std::vector<std::vector<std::pair<int, int>>> domains;
    bool require_distinct = true;
    long long budget = 2'000'000;
    std::vector<int> chosen; // index into domain, -1 unset
    std::vector<char> used_pos;

    bool ok(int i, const std::pair<int, int> &p) {
        if (require_distinct && (used_pos[p.first] || used_pos[p.second])) return false;
        int prev = (i - 1 + len) % len, next = (i + 1) % len;
        if (chosen[prev] >= 0 && !pairs_interleave(domains[prev][chosen[prev]], p)) return false;
        if (chosen[next] >= 0 && !pairs_interleave(domains[next][chosen[next]], p)) return false;
        return true;
    }

    bool dfs(int i) {
        if (--budget < 0) return false;
        if (i == len) return true;
        for (std::size_t d = 0; d < domains[i].size(); ++d) {
            const auto &p = domains[i][d];
            if (!ok(i, p)) continue;
            chosen[i] = static_cast<int>(d);
            if (require_distinct) used_pos[p.first] = used_pos[p.second] = 1;
            if (dfs(i + 1)) return true;
            if (require_distinct) used_pos[p.first] = used_pos[p.second] = 0;
            chosen[i] = -1;
        }
        return false;
    }
};

} // namespace

ReduceOutcome reduce_bridges_to_paths(const WitnessCycle &wc, const std::vector<int> &odd) {
    int len = static_cast<int>(odd.size());
    if (len < 5 || len % 2 == 0)
        throw std::invalid_argument("reduction requires an odd cycle of length >= 5");
    int L = wc.cycle.length();

    ReduceOutcome out;

    // candidate attachment pairs per odd-cycle bridge
    std::vector<std::vector<std::pair<int, int>>> domains(len);
    for (int i = 0; i < len; ++i) {
        const Bridge &b = wc.bridges[odd[i]];
        for (std::size_t a = 0; a < b.positions.size(); ++a)
            for (std::size_t c = a + 1; c < b.positions.size(); ++c)
                domains[i].emplace_back(b.positions[a], b.positions[c]);
    }

    // arc consistency over the ring of interleaving constraints
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int i = 0; i < len; ++i) {
            auto &dom = domains[i];
            const auto &prev = domains[(i - 1 + len) % len];
            const auto &next = domains[(i + 1) % len];
            auto supported = [&](const std::pair<int, int> &p) {
                bool okp = false, okn = false;
                for (const auto &q : prev)
                    if (pairs_interleave(p, q)) {
                        okp = true;
                        break;
                    }
                for (const auto &q : next)
                    if (pairs_interleave(p, q)) {
                        okn = true;
                        break;
                    }
                return okp && okn;
            };
            std::size_t before = dom.size();
            dom.erase(std::remove_if(dom.begin(), dom.end(),
                                     [&](const auto &p) { return !supported(p); }),
                      dom.end());
            if (dom.size() != before) shrunk = true;
        }
    }

    for (int i = 0; i < len; ++i) {
        if (!domains[i].empty()) continue;
        // No interleaving pair between two consecutive bridges: both must be
        // 3-attachment bridges sharing all three points, which forces a
        // conflict triangle with either neighbor of the pair.
        int j = (i + 1) % len;
        out.status = ReduceOutcome::Status::RedirectToTriangle;
        out.triangle = {odd[(i - 1 + len) % len], odd[i], odd[j]};
        return out;
    }

    PairSearch ps;
    ps.len = len;
    ps.domains = domains;
    ps.require_distinct = true;
    ps.chosen.assign(len, -1);
    ps.used_pos.assign(L, 0);
    if (!ps.dfs(0)) {
        out.status = ReduceOutcome::Status::NoSelection;
        return out;
    }

    // marked points and the pattern check
    struct Mark {
        int pos, bridge; // bridge = index into odd
    };
    std::vector<Mark> marks;
    for (int i = 0; i < len; ++i) {
        const auto &p = ps.domains[i][ps.chosen[i]];
        marks.push_back({p.first, i});
        marks.push_back({p.second, i});
    }
    std::sort(marks.begin(), marks.end(), [](const Mark &a, const Mark &b) { return a.pos < b.pos; });
    int M = 2 * len;

    auto slot_bridge = [&](int s) { // template bridge index at pattern slot s
        if (s % 2 == 0) return (s / 2) % len;
        return ((s - 3) / 2 % len + len) % len;
    };

    for (int dir : {1, -1}) {
        for (int start = 0; start < M; ++start) {
            int base = marks[start].bridge;
            int second = marks[(start + 2 * dir % M + M) % M].bridge;
            int delta = 0;
            if ((base + 1) % len == second) delta = 1;
            else if ((base - 1 + len) % len == second) delta = -1;
            else continue;
            bool match = true;
            for (int s = 0; s < M && match; ++s) {
                int ms = (start + dir * s % M + M) % M;
                int want = ((base + delta * slot_bridge(s)) % len + len) % len;
                if (marks[ms].bridge != want) match = false;
            }
            if (!match) continue;

            // success: relabel and emit
            PathReduction pr;
            pr.cycle = wc.cycle;
            pr.direction = dir;
            pr.pattern_to_cyclepos.resize(M);
            for (int s = 0; s < M; ++s)
                pr.pattern_to_cyclepos[s] = marks[((start + dir * s) % M + M) % M].pos;
            for (int j = 0; j < len; ++j) {
                int oi = ((base + delta * j) % len + len) % len;
                pr.odd.push_back(odd[oi]);
                int pu = pr.pattern_to_cyclepos[2 * j];
                int pv = pr.pattern_to_cyclepos[(2 * j + 3) % M];
                int u = wc.cycle.vertices[pu], v = wc.cycle.vertices[pv];
                pr.chosen.emplace_back(u, v);
                pr.paths.push_back(bridge_path(wc.gprime, wc.bridges[odd[oi]], u, v));
            }
            out.status = ReduceOutcome::Status::Ok;
            out.reduction = std::move(pr);
            return out;
        }
    }
    out.status = ReduceOutcome::Status::NoSelection;
    return out;
}

KuratowskiMinor k5_minor_from_reduction(const WitnessCycle &wc, const PathReduction &pr) {
    int len = static_cast<int>(pr.odd.size());
    int k = (len - 1) / 2;
    if (k < 2) throw std::invalid_argument("pattern reduction needs an odd cycle >= 5");
    int M = 2 * len; // 4k + 2 pattern slots
    int L = pr.cycle.length();

    // residue-class assignment of pattern slots to the five branch sets
    auto set_of_slot = [&](int p) {
        if (p == 0 || p == 3) return 0;
        if (p == 2 || p == 5) return 1;
        if (p == 4 || p == 7) return 2;
        if (p == 6) return 3;
        if (p == 1 || p == 8) return 4;
        if (p >= 9 && p <= 4 * k + 1 && (p % 4 == 1 || p % 4 == 2)) return 3;
        if (p >= 11 && p <= 4 * k && (p % 4 == 3 || p % 4 == 0)) return 4;
        throw std::logic_error("pattern slot unassigned");
    };

    std::vector<std::set<int>> sets(5);
    for (int p = 0; p < M; ++p) {
        int s = set_of_slot(p);
        sets[s].insert(pr.cycle.vertices[pr.pattern_to_cyclepos[p]]);
        // absorb the arc from this marked point to the next one
        int from = pr.pattern_to_cyclepos[p];
        int to = pr.pattern_to_cyclepos[(p + 1) % M];
        for (int q = (from + pr.direction + L) % L; q != to; q = (q + pr.direction + L) % L)
            sets[s].insert(pr.cycle.vertices[q]);
    }
    // bridge paths: chord j spans slots 2j and 2j+3, both in the same set
    for (int j = 0; j < len; ++j) {
        int s1 = set_of_slot(2 * j), s2 = set_of_slot((2 * j + 3) % M);
        if (s1 != s2) throw std::logic_error("pattern chord crosses branch sets");
        for (std::size_t i = 1; i + 1 < pr.paths[j].size(); ++i) sets[s1].insert(pr.paths[j][i]);
    }

    KuratowskiMinor minor;
    minor.kind = MinorModel::Kind::K5;
    for (auto &s : sets) minor.branch_sets.emplace_back(s.begin(), s.end());
    if (!verify_minor(wc.gprime, minor))
        throw std::logic_error("pattern K5 construction failed verification");
    return minor;
}

// ---------------------------------------------------------------------------
// Triangle case
// ---------------------------------------------------------------------------

namespace {

struct KeptPair {
    std::vector<int> first_pts, second_pts; // cycle vertices kept per side
};

// Canonical small witness of a conflict, at most 2 points per side except in
// the both-exactly-3-shared case (3 shared points each).
KeptPair kept_for_conflict(const Bridge &b1, const Bridge &b2, const Cycle &c) {
    std::vector<int> shared;
    {
        std::vector<int> s1 = b1.attachments, s2 = b2.attachments;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                              std::back_inserter(shared));
    }
    std::map<int, int> vpos;
    for (int i = 0; i < c.length(); ++i) vpos[c.vertices[i]] = i;
    auto by_pos = [&](std::vector<int> vs) {
        std::sort(vs.begin(), vs.end(), [&](int a, int b) { return vpos[a] < vpos[b]; });
        return vs;
    };

    if (shared.size() >= 4) {
        // alternate four shared points between the two sides
        auto s = by_pos(shared);
        return {{s[0], s[2]}, {s[1], s[3]}};
    }
    if (shared.size() == 3) {
        bool b1_extra = b1.attachments.size() > 3;
        bool b2_extra = b2.attachments.size() > 3;
        if (!b1_extra && !b2_extra) {
            auto s = by_pos(shared);
            return {s, s}; // both keep the three shared points
        }
        // one bridge has a fourth attachment a4 in some gap (s_t, s_t+1):
        // big keeps {a4, s_t+2}, the other keeps {s_t, s_t+1}
        const Bridge &big = b1_extra ? b1 : b2;
        auto s = by_pos(shared);
        int a4 = -1;
        for (int a : big.attachments)
            if (a != s[0] && a != s[1] && a != s[2]) {
                a4 = a;
                break;
            }
        int pa = vpos[a4];
        int t = -1;
        for (int i = 0; i < 3; ++i) {
            int lo = vpos[s[i]], hi = vpos[s[(i + 1) % 3]];
            int rel = (pa - lo + c.length()) % c.length();
            int span = (hi - lo + c.length()) % c.length();
            if (rel > 0 && rel < span) {
                t = i;
                break;
            }
        }
        if (t < 0) throw std::logic_error("fourth attachment not in any gap");
        std::vector<int> big_pts = {a4, s[(t + 2) % 3]};
        std::vector<int> small_pts = {s[t], s[(t + 1) % 3]};
        if (b1_extra) return {big_pts, small_pts};
        return {small_pts, big_pts};
    }
    auto w = conflicts(b1, b2, c);
    if (!w || w->mode != ConflictWitness::Mode::Interleave)
        throw std::invalid_argument("bridges do not conflict by interleaving");
    return {{w->points[0], w->points[2]}, {w->points[1], w->points[3]}};
}

} // namespace

KuratowskiMinor triangle_case(const WitnessCycle &wc, const std::array<int, 3> &bridge_ids) {
    const Graph &gp = wc.gprime;
    const Cycle &c = wc.cycle;
    std::map<int, int> vpos;
    for (int i = 0; i < c.length(); ++i) vpos[c.vertices[i]] = i;

    // kept attachments per bridge: union of the witnesses of its two conflicts
    std::vector<std::set<int>> kept(3);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            KeptPair kp = kept_for_conflict(wc.bridges[bridge_ids[a]], wc.bridges[bridge_ids[b]],
                                            c);
            kept[a].insert(kp.first_pts.begin(), kp.first_pts.end());
            kept[b].insert(kp.second_pts.begin(), kp.second_pts.end());
        }
    for (int i = 0; i < 3; ++i)
        if (kept[i].size() > 4) throw std::logic_error("kept more than 4 attachments");

    // reduced cycle: kept vertices in cycle order; arcs contract to edges
    std::set<int> marked_set;
    for (int i = 0; i < 3; ++i) marked_set.insert(kept[i].begin(), kept[i].end());
    std::vector<int> marked(marked_set.begin(), marked_set.end());
    std::sort(marked.begin(), marked.end(), [&](int a, int b) { return vpos[a] < vpos[b]; });
    int t = static_cast<int>(marked.size());
    std::map<int, int> rid; // cycle vertex -> reduced id
    for (int i = 0; i < t; ++i) rid[marked[i]] = i;

    // reduced vertices: 0..t-1 cycle, then one hub per component bridge
    int nred = t;
    std::array<int, 3> hub = {-1, -1, -1};
    for (int i = 0; i < 3; ++i)
        if (wc.bridges[bridge_ids[i]].kind == Bridge::Kind::Component) hub[i] = nred++;

    std::set<std::pair<int, int>> redges;
    auto add_edge = [&](int a, int b) {
        if (a != b) redges.insert({std::min(a, b), std::max(a, b)});
    };
    for (int i = 0; i < t; ++i) add_edge(i, (i + 1) % t);
    for (int i = 0; i < 3; ++i) {
        const Bridge &b = wc.bridges[bridge_ids[i]];
        if (b.kind == Bridge::Kind::Chord) {
            add_edge(rid[b.attachments[0]], rid[b.attachments[1]]);
        } else {
            for (int a : kept[i]) add_edge(hub[i], rid[a]);
        }
    }
    std::vector<std::pair<int, int>> redge_list(redges.begin(), redges.end());
    Graph reduced = Graph::build(nred, redge_list);

    if (reduced.vertex_count() > 15 || reduced.edge_count() > 24)
        throw std::logic_error("triangle reduction exceeded 15 vertices / 24 edges");

    auto model = brute_force_minor(reduced, MinorModel::Kind::K5);
    if (!model) model = brute_force_minor(reduced, MinorModel::Kind::K33);
    if (!model) throw std::logic_error("reduced triangle instance has no Kuratowski minor");

    // contraction preimages: reduced cycle vertex i owns the arc from marked[i]
    // (inclusive) up to the next marked vertex (exclusive); hubs own interiors
    std::vector<std::vector<int>> preimage(nred);
    int L = c.length();
    for (int i = 0; i < t; ++i) {
        int from = vpos[marked[i]];
        int to = vpos[marked[(i + 1) % t]];
        for (int q = from; q != to; q = (q + 1) % L) preimage[i].push_back(c.vertices[q]);
    }
    for (int i = 0; i < 3; ++i)
        if (hub[i] >= 0) preimage[hub[i]] = wc.bridges[bridge_ids[i]].vertices;

    KuratowskiMinor minor;
    minor.kind = model->kind;
    for (const auto &bs : model->branch_sets) {
        std::set<int> expanded;
        for (int rv : bs)
            expanded.insert(preimage[rv].begin(), preimage[rv].end());
        minor.branch_sets.emplace_back(expanded.begin(), expanded.end());
    }
    if (!verify_minor(gp, minor))
        throw std::logic_error("triangle-case expansion failed verification");
    return minor;
}

// ---------------------------------------------------------------------------
// Fallback for coincident pattern points, and the driver
// ---------------------------------------------------------------------------

namespace {

} // namespace

// Chord-normalization fallback: reduce bridges to chords allowing shared
// endpoints, contract arcs between non-conflicting marks, brute-force the
// bounded core and expand back through the contraction classes.
std::optional<KuratowskiMinor> reduce_with_shared_endpoints(const WitnessCycle &wc,
                                                            const std::vector<int> &odd) {
    int len = static_cast<int>(odd.size());
    int L = wc.cycle.length();

    PairSearch ps;
    ps.len = len;
    ps.domains.resize(len);
    for (int i = 0; i < len; ++i) {
        const Bridge &b = wc.bridges[odd[i]];
        for (std::size_t a = 0; a < b.positions.size(); ++a)
            for (std::size_t c2 = a + 1; c2 < b.positions.size(); ++c2)
                ps.domains[i].emplace_back(b.positions[a], b.positions[c2]);
    }
    ps.require_distinct = false;
    ps.chosen.assign(len, -1);
    ps.used_pos.assign(L, 0);
    if (!ps.dfs(0)) return std::nullopt;

    std::vector<std::pair<int, int>> chosen(len);
    for (int i = 0; i < len; ++i) chosen[i] = ps.domains[i][ps.chosen[i]];

    // marks: distinct chosen positions in cycle order
    std::set<int> mark_pos;
    for (auto [p, q] : chosen) {
        mark_pos.insert(p);
        mark_pos.insert(q);
    }
    std::vector<int> marks(mark_pos.begin(), mark_pos.end());
    int t = static_cast<int>(marks.size());
    std::map<int, int> mark_of;
    for (int i = 0; i < t; ++i) mark_of[marks[i]] = i;

    // contraction classes over marks; merging joins adjacent classes
    std::vector<int> cls(t);
    for (int i = 0; i < t; ++i) cls[i] = i;
    std::vector<std::pair<int, int>> chord(len); // mark ids per bridge
    for (int i = 0; i < len; ++i) chord[i] = {mark_of[chosen[i].first], mark_of[chosen[i].second]};

    auto chords_at = [&](int cklass) {
        std::vector<int> out;
        for (int i = 0; i < len; ++i)
            if (cls[chord[i].first] == cklass || cls[chord[i].second] == cklass) out.push_back(i);
        return out;
    };
    auto conflicting = [&](int i, int j) {
        int d = std::abs(i - j);
        return d == 1 || d == len - 1;
    };

    // repeatedly contract an arc between cyclically adjacent classes when no
    // conflicting chord pair or single chord spans them
    bool changed = true;
    while (changed) {
        changed = false;
        // class ring order: classes of marks in cycle order, deduped
        std::vector<int> ring;
        for (int i = 0; i < t; ++i)
            if (ring.empty() || cls[i] != ring.back()) ring.push_back(cls[i]);
        if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
        int R = static_cast<int>(ring.size());
        if (R <= 3) break;
        for (int r = 0; r < R && !changed; ++r) {
            int ca = ring[r], cb = ring[(r + 1) % R];
            if (ca == cb) continue;
            bool allowed = true;
            for (int i : chords_at(ca)) {
                for (int j : chords_at(cb)) {
                    if (i == j) allowed = false; // chord would become a loop
                    else if (conflicting(i, j)) allowed = false;
                }
            }
            if (!allowed) continue;
            for (int i = 0; i < t; ++i)
                if (cls[i] == cb) cls[i] = ca;
            changed = true;
        }
    }

    // final ring of classes
    std::vector<int> ring;
    for (int i = 0; i < t; ++i)
        if (ring.empty() || cls[i] != ring.back()) ring.push_back(cls[i]);
    if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
    std::map<int, int> rindex;
    for (std::size_t i = 0; i < ring.size(); ++i) rindex[ring[i]] = static_cast<int>(i);
    int R = static_cast<int>(ring.size());
    if (R > 16 || R < 3) return std::nullopt;

    std::set<std::pair<int, int>> redges;
    for (int i = 0; i < R; ++i)
        redges.insert({std::min(i, (i + 1) % R), std::max(i, (i + 1) % R)});
    for (int i = 0; i < len; ++i) {
        int a = rindex[cls[chord[i].first]], b = rindex[cls[chord[i].second]];
        if (a == b) continue; // intra-class chord, interior absorbed later
        redges.insert({std::min(a, b), std::max(a, b)});
    }
    Graph reduced = Graph::build(R, std::vector<std::pair<int, int>>(redges.begin(), redges.end()));
    auto model = brute_force_minor(reduced, MinorModel::Kind::K5);
    if (!model) model = brute_force_minor(reduced, MinorModel::Kind::K33);
    if (!model) return std::nullopt;

    // expand classes: each reduced vertex owns its marks plus arcs forward to
    // the next mark of a different class
    std::vector<std::set<int>> preimage(R);
    for (int i = 0; i < t; ++i) {
        int r = rindex[cls[i]];
        int from = marks[i];
        int to = marks[(i + 1) % t];
        for (int q = from; q != to; q = (q + 1) % L) preimage[r].insert(wc.cycle.vertices[q]);
    }

    // paths through bridges
    std::vector<std::vector<int>> bpath(len);
    for (int i = 0; i < len; ++i) {
        int u = wc.cycle.vertices[chosen[i].first], v = wc.cycle.vertices[chosen[i].second];
        bpath[i] = bridge_path(wc.gprime, wc.bridges[odd[i]], u, v);
    }

    std::vector<int> set_of_red(R, -1);
    for (std::size_t s = 0; s < model->branch_sets.size(); ++s)
        for (int rv : model->branch_sets[s]) set_of_red[rv] = static_cast<int>(s);

    KuratowskiMinor minor;
    minor.kind = model->kind;
    minor.branch_sets.assign(model->branch_sets.size(), {});
    std::vector<std::set<int>> expanded(model->branch_sets.size());
    for (std::size_t s = 0; s < model->branch_sets.size(); ++s)
        for (int rv : model->branch_sets[s])
            expanded[s].insert(preimage[rv].begin(), preimage[rv].end());

    // absorb intra-set chord interiors; collect inter-set chords as candidates
    std::vector<char> bridge_used(len, 0);
    for (int i = 0; i < len; ++i) {
        int a = rindex[cls[chord[i].first]], b = rindex[cls[chord[i].second]];
        int sa = set_of_red[a], sb = set_of_red[b];
        if (sa >= 0 && sa == sb) {
            for (std::size_t q = 1; q + 1 < bpath[i].size(); ++q) expanded[sa].insert(bpath[i][q]);
            bridge_used[i] = 1;
        }
    }
    for (std::size_t s = 0; s < expanded.size(); ++s)
        minor.branch_sets[s].assign(expanded[s].begin(), expanded[s].end());

    // realize required adjacencies: direct edge first, else a chord path
    std::vector<std::pair<int, int>> required;
    if (minor.kind == MinorModel::Kind::K5) {
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) required.emplace_back(a, b);
    } else {
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) required.emplace_back(a, b);
    }
    std::vector<int> owner(wc.gprime.vertex_count(), -1);
    for (std::size_t s = 0; s < minor.branch_sets.size(); ++s)
        for (int v : minor.branch_sets[s]) owner[v] = static_cast<int>(s);
    for (auto [a, b] : required) {
        bool direct = false;
        for (int v : minor.branch_sets[a]) {
            for (int e : wc.gprime.incident(v))
                if (owner[wc.gprime.other_end(e, v)] == b) {
                    direct = true;
                    break;
                }
            if (direct) break;
        }
        if (direct) continue;
        bool found = false;
        for (int i = 0; i < len && !found; ++i) {
            if (bridge_used[i]) continue;
            int ra = rindex[cls[chord[i].first]], rb = rindex[cls[chord[i].second]];
            int sa = set_of_red[ra], sb = set_of_red[rb];
            if ((sa == a && sb == b) || (sa == b && sb == a)) {
                minor.paths.push_back(bpath[i]);
                bridge_used[i] = 1;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }

    if (!verify_minor(wc.gprime, minor)) return std::nullopt;
    return minor;
}

namespace {

// One deletion pass over the edges leaves a deletion-minimal non-planar
// graph, which is exactly a K5 or K3,3 subdivision; its branch vertices and
// chains convert directly into a minor model. Used only when the bridge
// machinery fails on a degenerate instance.
KuratowskiMinor subdivision_fallback(const Graph &g) {
    int m = g.edge_count();
    std::vector<char> alive(m, 1);
    auto build = [&]() {
        std::vector<std::pair<int, int>> pairs;
        for (int e = 0; e < m; ++e)
            if (alive[e]) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
        return Graph::build(g.vertex_count(), pairs);
    };
    for (int e = 0; e < m; ++e) {
        alive[e] = 0;
        if (is_planar_result(embed(build()))) alive[e] = 1;
    }
    Graph s = build();

    std::vector<int> branch;
    for (int v = 0; v < s.vertex_count(); ++v)
        if (s.degree(v) >= 3) branch.push_back(v);

    MinorModel::Kind kind;
    if (branch.size() == 5) {
        for (int v : branch)
            if (s.degree(v) != 4) throw std::logic_error("malformed K5 subdivision");
        kind = MinorModel::Kind::K5;
    } else if (branch.size() == 6) {
        for (int v : branch)
            if (s.degree(v) != 3) throw std::logic_error("malformed K33 subdivision");
        kind = MinorModel::Kind::K33;
    } else {
        throw std::logic_error("deletion-minimal graph is not a Kuratowski subdivision");
    }

    std::vector<char> is_branch(s.vertex_count(), 0);
    for (int v : branch) is_branch[v] = 1;

    // chains between branch vertices
    std::vector<std::vector<int>> chains;
    for (int b : branch)
        for (int e0 : s.incident(b)) {
            std::vector<int> walk = {b};
            int prev = b, cur = s.other_end(e0, b);
            while (!is_branch[cur]) {
                walk.push_back(cur);
                int nxt = -1;
                for (int e : s.incident(cur)) {
                    int w = s.other_end(e, cur);
                    if (w != prev) nxt = w;
                }
                prev = cur;
                cur = nxt;
            }
            walk.push_back(cur);
            if (walk.front() < walk.back()) chains.push_back(std::move(walk));
        }

    KuratowskiMinor minor;
    minor.kind = kind;
    if (kind == MinorModel::Kind::K5) {
        for (int v : branch) minor.branch_sets.push_back({v});
    } else {
        // bipartition of the 6 branch vertices by chain adjacency
        std::map<int, int> idx;
        for (std::size_t i = 0; i < branch.size(); ++i) idx[branch[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(6);
        for (const auto &ch : chains) {
            adj[idx[ch.front()]].push_back(idx[ch.back()]);
            adj[idx[ch.back()]].push_back(idx[ch.front()]);
        }
        std::vector<int> color(6, -1);
        color[0] = 0;
        std::vector<int> queue = {0};
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : adj[queue[qi]])
                if (color[w] < 0) {
                    color[w] = 1 - color[queue[qi]];
                    queue.push_back(w);
                }
        for (int c : {0, 1})
            for (int i = 0; i < 6; ++i)
                if (color[i] == c) minor.branch_sets.push_back({branch[i]});
    }
    for (const auto &ch : chains)
        if (ch.size() > 2) minor.paths.push_back(ch);

    if (!verify_minor(g, minor)) throw std::logic_error("subdivision fallback failed verification");
    return minor;
}

// Greedy removal of redundant vertices from branch sets; keeps the model
// verified at every step.
void prune_model(const Graph &g, KuratowskiMinor &m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < m.branch_sets.size(); ++s) {
            for (int i = static_cast<int>(m.branch_sets[s].size()) - 1; i >= 0; --i) {
                if (m.branch_sets[s].size() <= 1) break;
                KuratowskiMinor cand = m;
                cand.branch_sets[s].erase(cand.branch_sets[s].begin() + i);
                if (verify_minor(g, cand)) {
                    m = std::move(cand);
                    changed = true;
                }
            }
        }
    }
}

} // namespace

KuratowskiMinor find_kuratowski(const Graph &g) {
    if (is_planar_result(embed(g))) throw std::invalid_argument("graph is planar");

    KuratowskiMinor model;
    bool have = false;
    try {
        MinimalPrefix mp = minimal_nonplanar_prefix(g);
        WitnessCycle wc = witness_cycle(mp);
        std::vector<int> odd = induced_odd_cycle(wc.h);

        if (odd.size() == 3) {
            model = triangle_case(wc, {odd[0], odd[1], odd[2]});
            have = true;
        } else {
            ReduceOutcome ro = reduce_bridges_to_paths(wc, odd);
            if (ro.status == ReduceOutcome::Status::Ok) {
                model = k5_minor_from_reduction(wc, ro.reduction);
                have = true;
            } else if (ro.status == ReduceOutcome::Status::RedirectToTriangle) {
                model = triangle_case(wc, ro.triangle);
                have = true;
            } else {
                auto fb = reduce_with_shared_endpoints(wc, odd);
                if (fb) {
                    model = *fb;
                    have = true;
                }
            }
        }
    } catch (const std::logic_error &) {
        have = false;
    }
    // Degenerate instances (no usable witness cycle or pattern selection)
    // fall back to deletion-minimalization, which always succeeds.
    if (!have) model = subdivision_fallback(g);

    prune_model(g, model);
    if (!verify_minor(g, model)) throw std::logic_error("extracted minor failed verification");
    return model;
}

} // namespace planar
