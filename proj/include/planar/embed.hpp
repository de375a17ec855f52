#ifndef PLANAR_EMBED_HPP
#define PLANAR_EMBED_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planar/conflict.hpp"
#include "planar/decompose.hpp"
#include "planar/embedding.hpp"
#include "planar/graph.hpp"

namespace planar {

/// Machine-checkable non-planarity evidence. The payload refers to the
/// `context` graph (usually the input itself; for composite inputs it is the
/// offending triconnected component, where virtual edges carry id -1).
struct NonPlanarEvidence {
    enum class Reason { NoFundamentalFace, NonbipartiteConflict, FaceCheckFailed };
    enum class FaceDefect {
        None,
        EdgeCountWrong,
        NotACycle,
        NotInduced,
        Separating,
        NotOrientable,
        EulerViolated
    };

    Reason reason = Reason::FaceCheckFailed;
    FaceDefect defect = FaceDefect::None;

    struct Context {
        int n = 0;
        std::vector<std::array<int, 3>> edges; // u, v, original edge id (-1 virtual)
    };
    Context context;
    std::vector<int> vertex_map; // context vertex -> input vertex; empty = identity

    std::vector<int> cycle;    // offending cycle as a vertex walk (context ids)
    std::vector<int> odd_walk; // bridge ids forming an odd closed walk in H_C
    std::array<int, 2> offending_edge = {-1, -1};
    std::vector<std::vector<int>> faces; // candidate faces as edge-id lists (context ids)
    std::string detail;

    // Re-checks the payload against the context graph.
    bool validate() const;
};

using EmbedResult = std::variant<PlanarEmbedding, NonPlanarEvidence>;

inline bool is_planar_result(const EmbedResult &r) {
    return std::holds_alternative<PlanarEmbedding>(r);
}

/// The smallest non-tree edge whose fundamental cycle is induced and
/// non-separating; nullopt when no such edge exists.
std::optional<int> find_fundamental_face(const Graph &g, const SpanningTree &t);

/// The enclosure order anchored at e0: e' < e iff in the 2-coloring of
/// H_{C(e)} the bridge holding e' is colored opposite to the bridge holding
/// e0. Stored over non-tree edge indices.
struct EnclosureRelation {
    int anchor = -1;            // e0
    std::vector<int> non_tree;  // ascending edge ids (anchor included)
    std::vector<int> nt_index;  // edge id -> position in non_tree, -1 otherwise
    std::vector<Cycle> cycles;  // fundamental cycles, parallel to non_tree
    std::vector<EdgeSet> pred;  // pred[i]: j such that non_tree[j] is enclosed by C(non_tree[i])

    bool precedes(int e_prime, int e) const;
    std::vector<std::pair<int, int>> pairs() const;
};

std::variant<EnclosureRelation, NonPlanarEvidence> enclosure(const Graph &g,
                                                             const SpanningTree &t, int e0);

/// Candidate face family: F(e) for each non-tree e != e0, the external face
/// C(e0), and the complement face recovered as the GF(2) sum of all others.
struct FaceBasis {
    struct Entry {
        enum class Label { ByEdge, External, Complement };
        Label label = Label::ByEdge;
        int edge = -1; // defining non-tree edge for ByEdge entries
        EdgeSet face;
        std::vector<int> immediate_pred; // P(e) as edge ids, kept for audit
    };
    std::vector<Entry> entries; // m - n + 2 of them
};

FaceBasis face_basis(const Graph &g, const EnclosureRelation &rel);

/// ok (nullopt) iff every candidate is a single simple cycle, every edge lies
/// on exactly two candidates, and in strict mode every candidate is induced
/// and non-separating.
std::optional<NonPlanarEvidence> verify_face_family(const Graph &g, const FaceBasis &fb,
                                                    bool strict = true);

/// Recovers the rotation system from a face list via angle adjacency; throws
/// std::invalid_argument when the walks do not assemble into one rotation
/// cycle per vertex.
PlanarEmbedding faces_to_rotation(const Graph &g, const std::vector<std::vector<int>> &walks);

/// Planarity test + embedding for 3-connected inputs (promise; violations
/// surface as evidence, never as silent wrong output).
EmbedResult embed_triconnected(const Graph &g, bool strict = true);

/// Full pipeline: connected components, blocks, triconnected components,
/// per-component embedding, composition.
EmbedResult embed(const Graph &g, bool strict = true);

} // namespace planar

#endif // PLANAR_EMBED_HPP
