#ifndef PLANAR_CONFLICT_HPP
#define PLANAR_CONFLICT_HPP

#include <optional>
#include <variant>
#include <vector>

#include "planar/graph.hpp"

namespace planar {

/// A bridge of a cycle C: either a chord of C, or a connected component X of
/// G - C together with its edges into C. Attachments are the cycle vertices
/// touched by the bridge, listed in cycle-position order.
struct Bridge {
    enum class Kind { Chord, Component };
    Kind kind = Kind::Chord;
    std::vector<int> vertices;    // component vertex set X, empty for chords
    std::vector<int> attachments; // cycle vertices, sorted by cycle position
    std::vector<int> positions;   // matching positions along the cycle order
    EdgeSet edges;
    int min_edge = -1; // smallest contained edge id, used for ordering
};

std::vector<Bridge> bridges_of_cycle(const Graph &g, const Cycle &c);

/// Evidence that two bridges conflict: either four attachments interleaving
/// around the cycle in the order a1,a2,a1',a2' (a1,a1' from the first bridge),
/// or three shared attachment vertices.
struct ConflictWitness {
    enum class Mode { Interleave, Shared3 };
    Mode mode = Mode::Interleave;
    std::vector<int> points; // vertices: interleave: a1,a2,a1',a2'; shared3: 3 shared
};

std::optional<ConflictWitness> conflicts(const Bridge &b1, const Bridge &b2, const Cycle &c);

struct ConflictEdge {
    int a = -1;
    int b = -1;
    ConflictWitness witness;
};

/// Conflict graph H_C(G): one node per bridge of C, edges between conflicting
/// bridges, each edge carrying its witness.
struct ConflictGraph {
    int node_count = 0;
    std::vector<ConflictEdge> edges;
    std::vector<std::vector<int>> adj; // neighbor lists

    bool adjacent(int a, int b) const;
};

ConflictGraph conflict_graph(const Graph &g, const Cycle &c);
ConflictGraph conflict_graph_of_bridges(const std::vector<Bridge> &bridges, const Cycle &c);

/// color[i] in {0,1}; the anchor gets 0, and in every other connected
/// component the smallest node id gets 0.
struct Coloring {
    std::vector<int> color;
};

/// An odd closed walk: nodes[0], nodes[1], ..., nodes.back(), nodes[0].
struct OddCycleWitness {
    std::vector<int> nodes;
};

std::variant<Coloring, OddCycleWitness> two_color(const ConflictGraph &h, int anchor);

} // namespace planar

#endif // PLANAR_CONFLICT_HPP
