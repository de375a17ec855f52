#ifndef PLANAR_EMBEDDING_HPP
#define PLANAR_EMBEDDING_HPP

#include <vector>

namespace planar {

/// Combinatorial embedding: a cyclic order of incident edge ids at every
/// vertex plus the face walks it induces. Face tracing convention: arriving
/// at v along edge e, the walk departs along the successor of e in
/// rotation[v]. An isolated vertex contributes the one-vertex face [v].
struct PlanarEmbedding {
    std::vector<std::vector<int>> rotation; // per vertex: incident edge ids, cyclic
    std::vector<std::vector<int>> faces;    // per face: closed vertex walk
    int external = 0;                       // index into faces
};

} // namespace planar

#endif // PLANAR_EMBEDDING_HPP
