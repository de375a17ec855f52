#include "planar/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <stdexcept>

namespace planar {

std::uint64_t Graph::key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>> &pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.inc_.resize(n);
    g.edges_.reserve(pairs.size());
    for (const auto &[u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        auto [it, inserted] = g.index_.emplace(key(u, v), g.edge_count());
        if (!inserted)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        int id = g.edge_count();
        g.edges_.push_back({u, v});
        g.inc_[u].push_back(id);
        g.inc_[v].push_back(id);
    }
    return g;
}

int Graph::find_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
    auto it = index_.find(key(u, v));
    return it == index_.end() ? -1 : it->second;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : inc_[v]) {
            int w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
        }
    }
    return cnt == n_;
}

EdgeSet &EdgeSet::operator^=(const EdgeSet &o) {
    if (m_ != o.m_) throw std::invalid_argument("EdgeSet universe mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    return *this;
}

EdgeSet &EdgeSet::subtract(const EdgeSet &o) {
    if (m_ != o.m_) throw std::invalid_argument("EdgeSet universe mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
}

bool EdgeSet::intersects(const EdgeSet &o) const {
    if (m_ != o.m_) throw std::invalid_argument("EdgeSet universe mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & o.bits_[i]) return true;
    return false;
}

int EdgeSet::count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
}

bool EdgeSet::empty() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

std::vector<int> EdgeSet::ids() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
}

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return Graph::build(n, pairs);
}

Graph grid_graph(int r, int c) {
    if (r < 1 || c < 1) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            int v = i * c + j;
            if (j + 1 < c) pairs.emplace_back(v, v + 1);
            if (i + 1 < r) pairs.emplace_back(v, v + c);
        }
    return Graph::build(r * c, pairs);
}

} // namespace

Graph canonical_graph(const std::string &name) {
    if (name == "K4") return complete_graph(4);
    if (name == "K5") return complete_graph(5);
    if (name == "K33") {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) pairs.emplace_back(u, v);
        return Graph::build(6, pairs);
    }
    if (name == "W5") {
        // Hub 0, rim 1..5. Spokes first, then rim edges (1,2)..(4,5),(1,5).
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= 5; ++i) pairs.emplace_back(0, i);
        for (int i = 1; i <= 4; ++i) pairs.emplace_back(i, i + 1);
        pairs.emplace_back(1, 5);
        return Graph::build(6, pairs);
    }
    if (name == "Q3") {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                if (__builtin_popcount(u ^ v) == 1) pairs.emplace_back(u, v);
        return Graph::build(8, pairs);
    }
    if (name == "Petersen") {
        std::vector<std::pair<int, int>> pairs = {
            {0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
            {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9},
        };
        return Graph::build(10, pairs);
    }
    if (name.rfind("grid(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(5, name.size() - 6);
        auto comma = inner.find(',');
        if (comma != std::string::npos) {
            try {
                int r = std::stoi(inner.substr(0, comma));
                int c = std::stoi(inner.substr(comma + 1));
                return grid_graph(r, c);
            } catch (const std::exception &) {
                // fall through to the unknown-name error
            }
        }
    }
    throw std::invalid_argument("unknown canonical graph: " + name);
}

SpanningTree spanning_tree(const Graph &g, int root) {
    int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    SpanningTree t;
    t.root = root;
    t.parent_vertex.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.depth.assign(n, -1);
    t.is_tree_edge.assign(g.edge_count(), 0);

    std::queue<int> q;
    q.push(root);
    t.depth[root] = 0;
    int visited = 1;
    std::vector<std::pair<int, int>> nbrs; // (neighbor, edge id)
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        nbrs.clear();
        for (int e : g.incident(v)) nbrs.emplace_back(g.other_end(e, v), e);
        std::sort(nbrs.begin(), nbrs.end());
        for (auto [w, e] : nbrs) {
            if (t.depth[w] >= 0) continue;
            t.depth[w] = t.depth[v] + 1;
            t.parent_vertex[w] = v;
            t.parent_edge[w] = e;
            t.is_tree_edge[e] = 1;
            q.push(w);
            ++visited;
        }
    }
    if (visited != n) throw std::invalid_argument("graph is not connected");
    return t;
}

Cycle cycle_from_vertices(const Graph &g, const std::vector<int> &order) {
    int len = static_cast<int>(order.size());
    if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Cycle c;
    c.vertices = order;
    c.edges = EdgeSet(g.edge_count());
    std::vector<char> seen(g.vertex_count(), 0);
    for (int i = 0; i < len; ++i) {
        int u = order[i];
        if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("cycle vertex out of range");
        if (seen[u]) throw std::invalid_argument("cycle repeats a vertex");
        seen[u] = 1;
        int e = g.find_edge(u, order[(i + 1) % len]);
        if (e < 0) throw std::invalid_argument("consecutive cycle vertices not adjacent");
        c.edges.set(e);
    }
    return c;
}

std::optional<Cycle> cycle_from_edge_set(const Graph &g, const EdgeSet &edges) {
    std::vector<int> ids = edges.ids();
    if (ids.size() < 3) return std::nullopt;
    std::unordered_map<int, std::vector<int>> at; // vertex -> incident set edges
    for (int e : ids) {
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
    }
    for (auto &[v, es] : at)
        if (es.size() != 2) return std::nullopt;

    int start = g.edge(ids[0]).u;
    for (int e : ids) {
        start = std::min({start, g.edge(e).u, g.edge(e).v});
    }
    std::vector<int> order;
    int prev_edge = -1;
    int v = start;
    do {
        order.push_back(v);
        auto &es = at[v];
        int next_edge = (es[0] == prev_edge) ? es[1] : es[0];
        if (prev_edge < 0) next_edge = std::min(es[0], es[1]); // deterministic direction
        v = g.other_end(next_edge, v);
        prev_edge = next_edge;
    } while (v != start && order.size() <= ids.size() + 1);
    if (v != start || order.size() != ids.size()) return std::nullopt;
    Cycle c;
    c.vertices = std::move(order);
    c.edges = edges;
    return c;
}

Cycle fundamental_cycle(const Graph &g, const SpanningTree &t, int e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge id out of range");
    if (t.is_tree_edge[e]) throw std::invalid_argument("fundamental cycle requires a non-tree edge");
    int u = g.edge(e).u, v = g.edge(e).v;
    std::vector<int> left = {u}, right = {v};
    int a = u, b = v;
    while (t.depth[a] > t.depth[b]) {
        a = t.parent_vertex[a];
        left.push_back(a);
    }
    while (t.depth[b] > t.depth[a]) {
        b = t.parent_vertex[b];
        right.push_back(b);
    }
    while (a != b) {
        a = t.parent_vertex[a];
        b = t.parent_vertex[b];
        left.push_back(a);
        right.push_back(b);
    }
    // left = [u .. lca], right = [v .. lca]; the cycle is u .. lca .. v, closed by e.
    std::vector<int> order = std::move(left);
    for (int i = static_cast<int>(right.size()) - 2; i >= 0; --i) order.push_back(right[i]);
    return cycle_from_vertices(g, order);
}

CycleFlags classify_cycle(const Graph &g, const Cycle &c) {
    // Validate the cycle against g (throws on malformed input).
    Cycle checked = cycle_from_vertices(g, c.vertices);
    if (!(checked.edges == c.edges))
        throw std::invalid_argument("cycle edge set inconsistent with vertex order");

    int n = g.vertex_count();
    int len = c.length();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < len; ++i) pos[c.vertices[i]] = i;

    CycleFlags flags;
    flags.induced = true;
    for (int i = 0; i < len && flags.induced; ++i) {
        int v = c.vertices[i];
        for (int e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (pos[w] < 0) continue;
            int d = std::abs(pos[w] - i);
            bool consecutive = (d == 1) || (d == len - 1);
            if (!consecutive) {
                flags.induced = false;
                break;
            }
        }
    }

    std::vector<int> retained;
    retained.reserve(n - len);
    for (int v = 0; v < n; ++v)
        if (pos[v] < 0) retained.push_back(v);
    flags.nonseparating = components(g, retained).size() <= 1;
    return flags;
}

std::vector<std::vector<int>> components(const Graph &g, const std::vector<int> &retained) {
    std::vector<char> keep(g.vertex_count(), 0);
    for (int v : retained) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("retained vertex out of range");
        keep[v] = 1;
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::vector<int>> out;
    std::vector<int> sorted_retained = retained;
    std::sort(sorted_retained.begin(), sorted_retained.end());
    for (int s : sorted_retained) {
        if (seen[s]) continue;
        std::vector<int> comp, stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (keep[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace planar
