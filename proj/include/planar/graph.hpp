#ifndef PLANAR_GRAPH_HPP
#define PLANAR_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace planar {

// Thrown by oracle operations whose input exceeds a hard size guard and no
// override was requested.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string &what) : std::runtime_error(what) {}
};

struct Edge {
    int u = -1;
    int v = -1;
};

/// Simple undirected graph with stable integer edge ids (input order).
/// Vertices are 0..n-1, edge ids 0..m-1. Self-loops and duplicate edges
/// are rejected at construction.
class Graph {
  public:
    Graph() = default;

    // Validates: no self-loops, no duplicates, endpoints within range.
    static Graph build(int n, const std::vector<std::pair<int, int>> &pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    Edge edge(int e) const { return edges_[e]; }
    int other_end(int e, int v) const {
        const Edge &ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }
    bool edge_has(int e, int v) const { return edges_[e].u == v || edges_[e].v == v; }

    // Incident edge ids of v, in edge-id order.
    std::span<const int> incident(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(inc_[v].size()); }

    // Edge id joining u and v, or -1.
    int find_edge(int u, int v) const;
    bool has_edge(int u, int v) const { return find_edge(u, v) >= 0; }

    bool connected() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
    std::unordered_map<std::uint64_t, int> index_;

    static std::uint64_t key(int u, int v);
};

/// Named graphs with fixed vertex/edge numbering (see README for the layout).
/// Recognized: K4, K5, K33, W5, Q3, Petersen, grid(r,c).
Graph canonical_graph(const std::string &name);

/// Subset of edge ids, i.e. a vector over GF(2) indexed by edges.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : m_(universe), bits_((universe + 63) / 64, 0) {}

    int universe() const { return m_; }
    bool test(int e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
    void set(int e) { bits_[e >> 6] |= std::uint64_t(1) << (e & 63); }
    void reset(int e) { bits_[e >> 6] &= ~(std::uint64_t(1) << (e & 63)); }
    void toggle(int e) { bits_[e >> 6] ^= std::uint64_t(1) << (e & 63); }

    EdgeSet &operator^=(const EdgeSet &o);
    friend EdgeSet operator^(EdgeSet a, const EdgeSet &b) { return a ^= b; }
    EdgeSet &subtract(const EdgeSet &o); // this &= ~o
    bool intersects(const EdgeSet &o) const;

    int count() const;
    bool empty() const;
    bool operator==(const EdgeSet &o) const { return m_ == o.m_ && bits_ == o.bits_; }
    bool operator<(const EdgeSet &o) const { return bits_ < o.bits_; }

    std::vector<int> ids() const; // ascending

    template <typename F> void for_each(F &&f) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                f(static_cast<int>(w * 64 + b));
                word &= word - 1;
            }
        }
    }

  private:
    int m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Breadth-first spanning tree; neighbors are explored in ascending vertex id,
/// so the tree is deterministic for a given graph and root.
struct SpanningTree {
    int root = -1;
    std::vector<int> parent_vertex; // -1 at root
    std::vector<int> parent_edge;   // -1 at root
    std::vector<int> depth;
    std::vector<char> is_tree_edge; // indexed by edge id
};

SpanningTree spanning_tree(const Graph &g, int root);

/// Simple cycle: cyclic vertex order plus the matching edge set.
struct Cycle {
    std::vector<int> vertices;
    EdgeSet edges;

    int length() const { return static_cast<int>(vertices.size()); }
};

// Builds a Cycle from a cyclic vertex order, validating that consecutive
// vertices are adjacent and no vertex repeats.
Cycle cycle_from_vertices(const Graph &g, const std::vector<int> &order);

// Traces the edge set into a vertex order; empty if the set is not a single
// simple cycle.
std::optional<Cycle> cycle_from_edge_set(const Graph &g, const EdgeSet &edges);

/// The unique cycle in T + e for a non-tree edge e.
Cycle fundamental_cycle(const Graph &g, const SpanningTree &t, int e);

struct CycleFlags {
    bool induced = false;
    bool nonseparating = false;
};

/// induced: no graph edge joins two non-consecutive cycle vertices.
/// nonseparating: deleting the cycle's vertices leaves at most one component.
CycleFlags classify_cycle(const Graph &g, const Cycle &c);

/// Connected components of the subgraph induced by `retained`.
/// Each component is sorted ascending; components ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph &g, const std::vector<int> &retained);

} // namespace planar

#endif // PLANAR_GRAPH_HPP
