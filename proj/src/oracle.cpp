#include "planar/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "planar/conflict.hpp"

namespace planar {

void for_each_cycle(const Graph &g, const std::function<bool(const Cycle &)> &fn) {
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    bool stop = false;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (stop) return;
        for (int e : g.incident(v)) {
            if (stop) return;
            int w = g.other_end(e, v);
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back() && !fn(cycle_from_vertices(g, path))) stop = true;
            } else if (w > start && !used[w]) {
                used[w] = 1;
                path.push_back(w);
                dfs(start, w);
                path.pop_back();
                used[w] = 0;
            }
        }
    };
    for (int s = 0; s < n && !stop; ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(s, s);
    }
}

bool tutte_planarity(const Graph &g, const OracleOptions &opt) {
    if (g.vertex_count() > 10 && !opt.override_guards)
        throw GuardExceeded("tutte_planarity guarded to n <= 10");
    bool planar = true;
    for_each_cycle(g, [&](const Cycle &c) {
        ConflictGraph h = conflict_graph(g, c);
        auto res = two_color(h, h.node_count ? 0 : -1);
        if (std::holds_alternative<OddCycleWitness>(res)) {
            planar = false;
            return false;
        }
        return true;
    });
    return planar;
}

std::vector<Cycle> enumerate_facelike_cycles(const Graph &g, const OracleOptions &opt) {
    if (g.vertex_count() > 12 && !opt.override_guards)
        throw GuardExceeded("enumerate_facelike_cycles guarded to n <= 12");
    std::vector<Cycle> out;
    for_each_cycle(g, [&](const Cycle &c) {
        CycleFlags f = classify_cycle(g, c);
        if (f.induced && f.nonseparating) out.push_back(c);
        return true;
    });
    // canonical order: by cycle length, then by canonicalized vertex walk
    auto canon = [](const Cycle &c) {
        const auto &v = c.vertices;
        int len = static_cast<int>(v.size());
        std::vector<int> best;
        for (int dir = 0; dir < 2; ++dir)
            for (int s = 0; s < len; ++s) {
                std::vector<int> cand(len);
                for (int i = 0; i < len; ++i)
                    cand[i] = dir ? v[(s - i + 2 * len) % len] : v[(s + i) % len];
                if (best.empty() || cand < best) best = cand;
            }
        return best;
    };
    std::sort(out.begin(), out.end(), [&](const Cycle &a, const Cycle &b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return canon(a) < canon(b);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Minor search
// ---------------------------------------------------------------------------

namespace {

struct MinorSearch {
    const Graph &g;
    int parts;                                      // 5 or 6
    std::vector<std::pair<int, int>> required;      // pairs of part indices
    std::vector<int> build_order;                   // order parts are grown
    std::vector<std::vector<char>> same_class;      // symmetry: root ordering
    std::vector<int> assign;                        // vertex -> part or -1
    std::vector<std::vector<int>> sets;
    std::vector<int> roots;
    bool adj(int pa, int pb) const {
        for (int v : sets[pa])
            for (int e : g.incident(v))
                if (assign[g.other_end(e, v)] == pb) return true;
        return false;
    }

    bool done = false;
    MinorModel result;

    explicit MinorSearch(const Graph &graph) : g(graph) {}

    // Required pairs between the newly finished part and earlier parts must
    // already be realized by a direct edge.
    bool check_new_part(int step) {
        int p = build_order[step];
        for (auto [a, b] : required) {
            int other = -1;
            if (a == p) other = b;
            if (b == p) other = a;
            if (other < 0) continue;
            bool earlier = false;
            for (int s = 0; s < step; ++s)
                if (build_order[s] == other) earlier = true;
            if (earlier && !adj(p, other)) return false;
        }
        return true;
    }

    void finish() {
        result.branch_sets.assign(parts, {});
        for (int p = 0; p < parts; ++p) {
            result.branch_sets[p] = sets[p];
            std::sort(result.branch_sets[p].begin(), result.branch_sets[p].end());
        }
        done = true;
    }

    void next_part(int step);

    // Enumerate connected supersets of the current part by frontier growth;
    // at every size, try to close the part and move on.
    void grow(int step, std::vector<int> &cand, std::size_t ci, int remaining_parts) {
        if (done) return;
        // try closing the part here
        if (check_new_part(step)) next_part(step + 1);
        if (done) return;
        int free_cnt = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (assign[v] < 0) ++free_cnt;
        if (free_cnt < remaining_parts) return;
        for (std::size_t i = ci; i < cand.size(); ++i) {
            int v = cand[i];
            if (assign[v] >= 0) continue;
            int p = build_order[step];
            assign[v] = p;
            sets[p].push_back(v);
            std::size_t extend_from = cand.size();
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (assign[w] < 0 && w > roots[p]) cand.push_back(w);
            }
            grow(step, cand, i + 1, remaining_parts);
            cand.resize(extend_from);
            sets[p].pop_back();
            assign[v] = -1;
            if (done) return;
        }
    }

    void start_part(int step) {
        int p = build_order[step];
        // symmetry: the root of each part is its smallest vertex, and roots
        // within one class ascend.
        int min_root = 0;
        for (int q = 0; q < parts; ++q)
            if (q != p && same_class[p][q] && !sets[q].empty() && build_order_pos(q) < step)
                min_root = std::max(min_root, roots[q] + 1);
        for (int r = min_root; r < g.vertex_count(); ++r) {
            if (assign[r] >= 0) continue;
            roots[p] = r;
            assign[r] = p;
            sets[p] = {r};
            std::vector<int> cand;
            for (int e : g.incident(r)) {
                int w = g.other_end(e, r);
                if (assign[w] < 0 && w > r) cand.push_back(w);
            }
            grow(step, cand, 0, parts - step - 1);
            assign[r] = -1;
            sets[p].clear();
            if (done) return;
        }
    }

    int build_order_pos(int part) const {
        for (int s = 0; s < parts; ++s)
            if (build_order[s] == part) return s;
        return -1;
    }
};

void MinorSearch::next_part(int step) {
    if (done) return;
    if (step == parts) {
        for (auto [a, b] : required)
            if (!adj(a, b)) return;
        finish();
        return;
    }
    start_part(step);
}

} // namespace

std::optional<MinorModel> brute_force_minor(const Graph &g, MinorModel::Kind kind,
                                            const OracleOptions &opt) {
    if (g.vertex_count() > 16 && !opt.override_guards)
        throw GuardExceeded("brute_force_minor guarded to n <= 16");

    MinorSearch ms(g);
    ms.result.kind = kind;
    if (kind == MinorModel::Kind::K5) {
        if (g.vertex_count() < 5 || g.edge_count() < 10) return std::nullopt;
        ms.parts = 5;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) ms.required.emplace_back(a, b);
        ms.build_order = {0, 1, 2, 3, 4};
        ms.same_class.assign(5, std::vector<char>(5, 1));
    } else {
        if (g.vertex_count() < 6 || g.edge_count() < 9) return std::nullopt;
        ms.parts = 6;
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) ms.required.emplace_back(a, b);
        // alternate classes so each new part carries constraints
        ms.build_order = {0, 3, 1, 4, 2, 5};
        ms.same_class.assign(6, std::vector<char>(6, 0));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) ms.same_class[a][b] = 1;
        for (int a = 3; a < 6; ++a)
            for (int b = 3; b < 6; ++b) ms.same_class[a][b] = 1;
    }
    ms.assign.assign(g.vertex_count(), -1);
    ms.sets.assign(ms.parts, {});
    ms.roots.assign(ms.parts, -1);
    ms.next_part(0);
    if (!ms.done) return std::nullopt;
    return ms.result;
}

bool verify_minor(const Graph &g, const MinorModel &m) {
    int parts = (m.kind == MinorModel::Kind::K5) ? 5 : 6;
    if (static_cast<int>(m.branch_sets.size()) != parts) return false;

    std::vector<int> owner(g.vertex_count(), -1);
    for (int p = 0; p < parts; ++p) {
        if (m.branch_sets[p].empty()) return false;
        for (int v : m.branch_sets[p]) {
            if (v < 0 || v >= g.vertex_count()) return false;
            if (owner[v] != -1) return false; // overlap
            owner[v] = p;
        }
    }
    // connectivity of each branch set
    for (int p = 0; p < parts; ++p) {
        std::vector<int> stack = {m.branch_sets[p][0]};
        std::set<int> seen = {m.branch_sets[p][0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (owner[w] == p && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        if (seen.size() != m.branch_sets[p].size()) return false;
    }

    // paths: vertex walks with endpoints in two distinct branch sets and
    // free interiors, interiors pairwise disjoint
    std::vector<char> path_used(g.vertex_count(), 0);
    std::set<std::pair<int, int>> path_links;
    for (const auto &pw : m.paths) {
        if (pw.size() < 2) return false;
        int a = owner[pw.front()], b = owner[pw.back()];
        if (a < 0 || b < 0 || a == b) return false;
        for (std::size_t i = 0; i + 1 < pw.size(); ++i)
            if (!g.has_edge(pw[i], pw[i + 1])) return false;
        for (std::size_t i = 1; i + 1 < pw.size(); ++i) {
            int v = pw[i];
            if (owner[v] != -1 || path_used[v]) return false;
            path_used[v] = 1;
        }
        path_links.insert({std::min(a, b), std::max(a, b)});
    }

    auto direct_edge = [&](int pa, int pb) {
        for (int v : m.branch_sets[pa])
            for (int e : g.incident(v))
                if (owner[g.other_end(e, v)] == pb) return true;
        return false;
    };
    std::vector<std::pair<int, int>> required;
    if (m.kind == MinorModel::Kind::K5) {
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) required.emplace_back(a, b);
    } else {
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) required.emplace_back(a, b);
    }
    for (auto [a, b] : required)
        if (!direct_edge(a, b) && !path_links.count({a, b})) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Embedding verification (independent tracer)
// ---------------------------------------------------------------------------

namespace {

std::vector<int> canonical_walk(const std::vector<int> &w) {
    int len = static_cast<int>(w.size());
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir)
        for (int s = 0; s < len; ++s) {
            std::vector<int> cand(len);
            for (int i = 0; i < len; ++i)
                cand[i] = dir ? w[(s - i + 2 * len) % len] : w[(s + i) % len];
            if (best.empty() || cand < best) best = cand;
        }
    return best;
}

} // namespace

bool verify_embedding(const Graph &g, const PlanarEmbedding &pe) {
    int n = g.vertex_count(), m = g.edge_count();
    if (static_cast<int>(pe.rotation.size()) != n) throw std::invalid_argument("rotation size");
    for (int v = 0; v < n; ++v) {
        std::vector<int> a = pe.rotation[v];
        std::sort(a.begin(), a.end());
        std::vector<int> b(g.incident(v).begin(), g.incident(v).end());
        std::sort(b.begin(), b.end());
        if (a != b) throw std::invalid_argument("rotation does not cover the incidences");
    }
    if (!pe.faces.empty() &&
        (pe.external < 0 || pe.external >= static_cast<int>(pe.faces.size())))
        return false;

    // independent face trace: position maps, dart successor orbits
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < pe.rotation[v].size(); ++i)
            pos[v][pe.rotation[v][i]] = static_cast<int>(i);

    std::vector<std::vector<int>> traced;
    std::vector<char> seen(2 * m, 0);
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[d0]) continue;
        std::vector<int> walk;
        int d = d0;
        while (!seen[d]) {
            seen[d] = 1;
            int e = d >> 1;
            int tail = (d & 1) ? g.edge(e).v : g.edge(e).u;
            int head = (d & 1) ? g.edge(e).u : g.edge(e).v;
            walk.push_back(tail);
            int j = pos[head].at(e);
            int deg = static_cast<int>(pe.rotation[head].size());
            int e2 = pe.rotation[head][(j + 1) % deg];
            d = (g.edge(e2).u == head) ? 2 * e2 : 2 * e2 + 1;
        }
        traced.push_back(std::move(walk));
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) traced.push_back({v});

    if (traced.size() != pe.faces.size()) return false;
    std::multiset<std::vector<int>> a, b;
    for (const auto &w : traced) a.insert(canonical_walk(w));
    for (const auto &w : pe.faces) b.insert(canonical_walk(w));
    if (a != b) return false;

    // Euler per connected component: V - E + F == 2 each.
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    auto comps = components(g, all);
    std::vector<int> comp_of(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<int> vcnt(comps.size(), 0), ecnt(comps.size(), 0), fcnt(comps.size(), 0);
    for (int v = 0; v < n; ++v) ++vcnt[comp_of[v]];
    for (int e = 0; e < m; ++e) ++ecnt[comp_of[g.edge(e).u]];
    for (const auto &w : traced) ++fcnt[comp_of[w.front()]];
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (vcnt[c] - ecnt[c] + fcnt[c] != 2) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

std::pair<Graph, PlanarEmbedding> gen_triangulation(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("triangulation needs n >= 4");
    std::mt19937_64 rng(seed);

    // grow edge pairs and rotations incrementally, faces as oriented triples
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    // rotation entries reference edge ids; maintain per-vertex circular order
    // via successor maps keyed by edge id.
    std::map<std::pair<int, int>, int> eid;
    auto edge_id = [&](int u, int v) {
        auto it = eid.find({std::min(u, v), std::max(u, v)});
        return it == eid.end() ? -1 : it->second;
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) eid[pairs[i]] = static_cast<int>(i);

    // K4 embedding: faces (0,1,2),(0,2,3),(0,3,1),(1,3,2)
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    std::vector<std::map<int, int>> succ(n); // per vertex: in-edge -> out-edge
    for (const auto &f : faces)
        for (int i = 0; i < 3; ++i) {
            int u = f[i], v = f[(i + 1) % 3], w = f[(i + 2) % 3];
            succ[v][edge_id(u, v)] = edge_id(v, w);
        }

    for (int w = 4; w < n; ++w) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        std::size_t fi = pick(rng);
        auto [a, b, c] = faces[fi];
        // new edges
        int e_aw, e_bw, e_cw;
        {
            int base = static_cast<int>(pairs.size());
            pairs.emplace_back(std::min(a, w), std::max(a, w));
            pairs.emplace_back(std::min(b, w), std::max(b, w));
            pairs.emplace_back(std::min(c, w), std::max(c, w));
            eid[pairs[base]] = base;
            eid[pairs[base + 1]] = base + 1;
            eid[pairs[base + 2]] = base + 2;
            e_aw = base;
            e_bw = base + 1;
            e_cw = base + 2;
        }
        int e_ab = edge_id(a, b), e_bc = edge_id(b, c), e_ca = edge_id(c, a);
        // the face a->b->c becomes a->b->w, b->c->w, c->a->w
        faces[fi] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
        // rotations: at a insert aw between ca and ab; at b insert bw between
        // ab and bc; at c insert cw between bc and ca; at w: wa -> wc -> wb
        succ[a][e_ca] = e_aw;
        succ[a][e_aw] = e_ab;
        succ[b][e_ab] = e_bw;
        succ[b][e_bw] = e_bc;
        succ[c][e_bc] = e_cw;
        succ[c][e_cw] = e_ca;
        succ[w][e_aw] = e_cw;
        succ[w][e_cw] = e_bw;
        succ[w][e_bw] = e_aw;
    }

    Graph g = Graph::build(n, pairs);
    PlanarEmbedding pe;
    pe.rotation.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) throw std::logic_error("triangulation vertex without rotation");
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            pe.rotation[v].push_back(cur);
            cur = succ[v].at(cur);
        } while (cur != start);
        if (static_cast<int>(pe.rotation[v].size()) != g.degree(v))
            throw std::logic_error("triangulation rotation incomplete");
    }
    for (const auto &f : faces) pe.faces.push_back({f[0], f[1], f[2]});
    pe.external = 0;
    return {g, pe};
}

Graph gen_gnm(int n, int m, std::uint64_t seed) {
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m) throw std::invalid_argument("too many edges requested");
    std::mt19937_64 rng(seed);
    std::set<std::pair<int, int>> chosen;
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(chosen.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<std::pair<int, int>> pairs(chosen.begin(), chosen.end());
    return Graph::build(n, pairs);
}

bool is_triconnected(const Graph &g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 3) return false;
    if (!g.connected()) return false;
    // no cut vertex and no separating pair
    for (int u = 0; u < n; ++u) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (v != u) keep.push_back(v);
        if (components(g, keep).size() > 1) return false;
        for (int w = u + 1; w < n; ++w) {
            std::vector<int> keep2;
            for (int v = 0; v < n; ++v)
                if (v != u && v != w) keep2.push_back(v);
            if (components(g, keep2).size() > 1) return false;
        }
    }
    return true;
}

} // namespace planar
