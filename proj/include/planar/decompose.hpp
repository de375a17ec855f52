#ifndef PLANAR_DECOMPOSE_HPP
#define PLANAR_DECOMPOSE_HPP

#include <vector>

#include "planar/embedding.hpp"
#include "planar/graph.hpp"

namespace planar {

/// Maximal biconnected subgraphs (as edge-id lists) plus cut vertices.
/// Works on disconnected graphs (a block-cut forest). Blocks are ordered by
/// smallest contained edge id. Isolated vertices belong to no block.
struct BlockCutTree {
    std::vector<std::vector<int>> block_edges;
    std::vector<std::vector<int>> block_vertices; // sorted
    std::vector<int> cut_vertices;                // sorted
    std::vector<std::vector<int>> blocks_of_cut;  // parallel to cut_vertices
};

BlockCutTree blocks(const Graph &g);

/// SPQR-style decomposition of a biconnected graph into S (cycle), P (bond)
/// and R (3-connected) components linked by virtual edge pairs. Components
/// keep original vertex ids; virtual edges carry graph_edge == -1.
struct SepComponent {
    char type = 'R'; // 'S', 'P', or 'R'
    std::vector<int> vertices;
    struct CEdge {
        int u = -1;
        int v = -1;
        int graph_edge = -1; // original edge id, -1 for virtual
        int pair_id = -1;    // index into SeparationTree::pairs, -1 for real
    };
    std::vector<CEdge> edges;
};

struct VirtualPair {
    int comp_a = -1, edge_a = -1;
    int comp_b = -1, edge_b = -1;
    int u = -1, v = -1; // the separating pair
};

struct SeparationTree {
    std::vector<SepComponent> components;
    std::vector<VirtualPair> pairs;
};

/// Requires g biconnected with at least 3 vertices.
SeparationTree triconnected_components(const Graph &g);

/// Glues the separation tree back into one graph; used by round-trip tests.
Graph merge_separation_tree(const Graph &g, const SeparationTree &st);

/// Rotation system of one component: rotation[i] lists indices into
/// SepComponent::edges for the i-th entry of SepComponent::vertices.
struct ComponentEmbedding {
    std::vector<std::vector<int>> rotation;
};

ComponentEmbedding embed_cycle_component(const SepComponent &c);
ComponentEmbedding embed_bond_component(const SepComponent &c);

/// Splices component embeddings across all virtual pairs into an embedding of
/// the underlying biconnected graph (virtual edges removed). Faces are
/// retraced from the merged rotation.
PlanarEmbedding compose_triconnected(const Graph &g, const SeparationTree &st,
                                     const std::vector<ComponentEmbedding> &embeddings);

/// Splices block embeddings at cut vertices: each block's rotation appears as
/// one contiguous arc in the merged rotation. Handles disconnected graphs and
/// isolated vertices.
PlanarEmbedding compose_blocks(const Graph &g, const BlockCutTree &bct,
                               const std::vector<PlanarEmbedding> &block_embeddings);

// Shared helpers for rotation systems over a Graph.
std::vector<std::vector<int>> trace_faces(const Graph &g,
                                          const std::vector<std::vector<int>> &rotation);

/// Smallest separating pair of a biconnected graph, or empty. Scans vertices
/// in ascending order and reports articulation points of g - u.
std::optional<std::pair<int, int>> find_separating_pair(const Graph &g);

std::vector<int> articulation_points(const Graph &g); // sorted

} // namespace planar

#endif // PLANAR_DECOMPOSE_HPP
