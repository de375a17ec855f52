#include "planar/conflict.hpp"

#include <algorithm>
#include <stdexcept>

namespace planar {

std::vector<Bridge> bridges_of_cycle(const Graph &g, const Cycle &c) {
    // Throws if c is not a genuine cycle of g.
    Cycle checked = cycle_from_vertices(g, c.vertices);
    if (!(checked.edges == c.edges))
        throw std::invalid_argument("cycle edge set inconsistent with vertex order");

    int n = g.vertex_count();
    int len = c.length();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < len; ++i) pos[c.vertices[i]] = i;

    std::vector<Bridge> out;

    // Chord bridges: edges joining two cycle vertices that are not cycle edges.
    for (int e = 0; e < g.edge_count(); ++e) {
        if (c.edges.test(e)) continue;
        int u = g.edge(e).u, v = g.edge(e).v;
        if (pos[u] < 0 || pos[v] < 0) continue;
        Bridge b;
        b.kind = Bridge::Kind::Chord;
        b.edges = EdgeSet(g.edge_count());
        b.edges.set(e);
        b.min_edge = e;
        if (pos[u] > pos[v]) std::swap(u, v);
        b.attachments = {u, v};
        b.positions = {pos[u], pos[v]};
        out.push_back(std::move(b));
    }

    // Component bridges: one per connected component of g minus the cycle.
    std::vector<int> retained;
    for (int v = 0; v < n; ++v)
        if (pos[v] < 0) retained.push_back(v);
    for (auto &comp : components(g, retained)) {
        Bridge b;
        b.kind = Bridge::Kind::Component;
        b.vertices = comp;
        b.edges = EdgeSet(g.edge_count());
        b.min_edge = g.edge_count();
        std::vector<char> in_comp(n, 0);
        for (int v : comp) in_comp[v] = 1;
        std::vector<char> att(n, 0);
        for (int v : comp) {
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (in_comp[w]) {
                    b.edges.set(e);
                    b.min_edge = std::min(b.min_edge, e);
                } else if (pos[w] >= 0) {
                    b.edges.set(e);
                    b.min_edge = std::min(b.min_edge, e);
                    att[w] = 1;
                }
            }
        }
        for (int i = 0; i < len; ++i)
            if (att[c.vertices[i]]) {
                b.attachments.push_back(c.vertices[i]);
                b.positions.push_back(i);
            }
        out.push_back(std::move(b));
    }

    std::sort(out.begin(), out.end(),
              [](const Bridge &a, const Bridge &b) { return a.min_edge < b.min_edge; });
    return out;
}

namespace {

// True iff all positions in `b` fit inside one closed gap between consecutive
// positions of `a` (both sorted ascending). In that case no alternation of
// the two position sets around the cycle exists.
bool contained_in_one_gap(const std::vector<int> &a, const std::vector<int> &b) {
    int k = static_cast<int>(a.size());
    // Candidate gap ids: gap i is the closed arc [a[i], a[(i+1)%k]].
    std::vector<int> cand;
    auto gaps_of = [&](int p, std::vector<int> &out) {
        out.clear();
        auto it = std::lower_bound(a.begin(), a.end(), p);
        if (it != a.end() && *it == p) {
            int j = static_cast<int>(it - a.begin());
            out.push_back((j - 1 + k) % k);
            out.push_back(j % k);
        } else {
            int j = static_cast<int>(it - a.begin());
            out.push_back((j - 1 + k) % k); // wraps to k-1 when p precedes a[0]
        }
    };
    std::vector<int> tmp;
    gaps_of(b[0], cand);
    for (std::size_t i = 1; i < b.size() && !cand.empty(); ++i) {
        gaps_of(b[i], tmp);
        std::vector<int> keep;
        for (int gidx : cand)
            if (std::find(tmp.begin(), tmp.end(), gidx) != tmp.end()) keep.push_back(gidx);
        cand = std::move(keep);
    }
    return !cand.empty();
}

// Searches four distinct positions p1 < p2 < p3 < p4 (cyclically) with
// p1,p3 from A and p2,p4 from B. Returns {p1,p2,p3,p4} or empty.
std::vector<int> find_alternation(const std::vector<int> &a, const std::vector<int> &b, int len) {
    std::vector<char> in_a(len, 0), in_b(len, 0);
    for (int p : a) in_a[p] = 1;
    for (int p : b) in_b[p] = 1;
    for (int p1 : a) {
        // greedy: first b strictly after p1, first a strictly after that, ...
        int p2 = -1, p3 = -1, p4 = -1;
        for (int d = 1; d < len; ++d) {
            int q = (p1 + d) % len;
            if (p2 < 0) {
                if (in_b[q]) p2 = q;
            } else if (p3 < 0) {
                if (in_a[q]) p3 = q;
            } else if (in_b[q]) {
                p4 = q;
                break;
            }
        }
        if (p4 >= 0) return {p1, p2, p3, p4};
    }
    return {};
}

} // namespace

std::optional<ConflictWitness> conflicts(const Bridge &b1, const Bridge &b2, const Cycle &c) {
    // Three or more shared attachments.
    std::vector<int> shared;
    {
        std::vector<int> s1 = b1.attachments, s2 = b2.attachments;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                              std::back_inserter(shared));
    }
    if (shared.size() >= 3) {
        ConflictWitness w;
        w.mode = ConflictWitness::Mode::Shared3;
        w.points = {shared[0], shared[1], shared[2]};
        return w;
    }

    if (b1.positions.size() < 2 || b2.positions.size() < 2) return std::nullopt;
    int len = c.length();

    if (contained_in_one_gap(b1.positions, b2.positions)) return std::nullopt;

    std::vector<int> alt = find_alternation(b1.positions, b2.positions, len);
    if (alt.empty()) return std::nullopt;
    ConflictWitness w;
    w.mode = ConflictWitness::Mode::Interleave;
    w.points = {c.vertices[alt[0]], c.vertices[alt[1]], c.vertices[alt[2]], c.vertices[alt[3]]};
    return w;
}

bool ConflictGraph::adjacent(int a, int b) const {
    for (int nb : adj[a])
        if (nb == b) return true;
    return false;
}

ConflictGraph conflict_graph_of_bridges(const std::vector<Bridge> &bridges, const Cycle &c) {
    ConflictGraph h;
    h.node_count = static_cast<int>(bridges.size());
    h.adj.resize(h.node_count);
    for (int i = 0; i < h.node_count; ++i)
        for (int j = i + 1; j < h.node_count; ++j) {
            auto w = conflicts(bridges[i], bridges[j], c);
            if (w) {
                h.edges.push_back({i, j, *w});
                h.adj[i].push_back(j);
                h.adj[j].push_back(i);
            }
        }
    return h;
}

ConflictGraph conflict_graph(const Graph &g, const Cycle &c) {
    return conflict_graph_of_bridges(bridges_of_cycle(g, c), c);
}

std::variant<Coloring, OddCycleWitness> two_color(const ConflictGraph &h, int anchor) {
    int n = h.node_count;
    if (n == 0) {
        if (anchor != -1 && anchor != 0) throw std::invalid_argument("anchor invalid for empty graph");
        return Coloring{};
    }
    if (anchor < 0 || anchor >= n) throw std::invalid_argument("anchor out of range");

    Coloring col;
    col.color.assign(n, -1);
    std::vector<int> parent(n, -1), depth(n, 0);

    auto bfs_from = [&](int start) -> std::optional<OddCycleWitness> {
        col.color[start] = 0;
        std::vector<int> queue = {start};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : h.adj[v]) {
                if (col.color[w] < 0) {
                    col.color[w] = 1 - col.color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (col.color[w] == col.color[v]) {
                    // Odd closed walk: v up to the meeting ancestor, down to w.
                    std::vector<int> lv = {v}, lw = {w};
                    int a = v, b = w;
                    while (depth[a] > depth[b]) lv.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) lw.push_back(b = parent[b]);
                    while (a != b) {
                        lv.push_back(a = parent[a]);
                        lw.push_back(b = parent[b]);
                    }
                    OddCycleWitness odd;
                    odd.nodes = lv; // v .. lca
                    for (int i = static_cast<int>(lw.size()) - 2; i >= 0; --i)
                        odd.nodes.push_back(lw[i]);
                    return odd;
                }
            }
        }
        return std::nullopt;
    };

    if (auto odd = bfs_from(anchor)) return *odd;
    for (int s = 0; s < n; ++s) {
        if (col.color[s] >= 0) continue;
        if (auto odd = bfs_from(s)) return *odd;
    }
    return col;
}

} // namespace planar
