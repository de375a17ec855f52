#ifndef PLANAR_KURATOWSKI_HPP
#define PLANAR_KURATOWSKI_HPP

#include <array>
#include <optional>
#include <vector>

#include "planar/conflict.hpp"
#include "planar/embed.hpp"
#include "planar/graph.hpp"
#include "planar/minor.hpp"

namespace planar {

/// Smallest prefix (under a fixed edge order) whose union is non-planar.
/// The prefix keeps the input's vertex numbering; prefix edge ids are
/// positions in the order, mapped back through `orig_edge`.
struct MinimalPrefix {
    Graph prefix;
    std::vector<int> orig_edge; // prefix edge id -> input edge id
    int culprit = -1;           // prefix edge id of e_i
    int x = -1, y = -1;         // culprit endpoints
};

/// order empty = edge-id order; otherwise a permutation of 0..m-1.
MinimalPrefix minimal_nonplanar_prefix(const Graph &g, std::vector<int> order = {});

/// A cycle of the prefix whose conflict graph (in the full prefix) is
/// non-bipartite, found through a dual path between faces holding the
/// culprit's endpoints.
struct WitnessCycle {
    Graph gprime; // the non-planar prefix
    int x = -1, y = -1;
    Cycle cycle;
    std::vector<int> dual_faces; // face indices along the dual path
    std::vector<Bridge> bridges; // bridges of cycle in gprime
    ConflictGraph h;             // non-bipartite
};

WitnessCycle witness_cycle(const MinimalPrefix &mp);

/// Spanning-forest 2-coloring, then a monochromatic non-tree edge whose
/// tree cycle has only bichromatic chords, then the chord short-circuit walk.
/// The output is verified chordless and odd.
std::vector<int> induced_odd_cycle(const ConflictGraph &h);

/// Per-bridge attachment pairs realizing the interleaving pattern
/// u_0, v_2k, u_1, v_0, u_2, v_1, ..., and one internally disjoint path per
/// bridge. Pattern slots: u_j at slot 2j, v_j at slot 2j+3 (mod 4k+2).
struct PathReduction {
    std::vector<int> odd;                     // bridge ids, relabeled order
    std::vector<std::pair<int, int>> chosen;  // (u_j, v_j) cycle vertices per j
    std::vector<std::vector<int>> paths;      // u_j .. v_j walks through bridges
    std::vector<int> pattern_to_cyclepos;     // slot -> position on the cycle
    int direction = 1;                        // +-1: slot order around the cycle
    Cycle cycle;
};

struct ReduceOutcome {
    enum class Status { Ok, RedirectToTriangle, NoSelection };
    Status status = Status::NoSelection;
    PathReduction reduction;        // when Ok
    std::array<int, 3> triangle{};  // when RedirectToTriangle
};

ReduceOutcome reduce_bridges_to_paths(const WitnessCycle &wc, const std::vector<int> &odd);

/// Fallback for odd cycles whose bridges admit no selection with all-distinct
/// pattern points (forced shared endpoints): reduce to chords, contract arcs
/// between non-conflicting marks, brute-force the bounded core and expand.
std::optional<KuratowskiMinor> reduce_with_shared_endpoints(const WitnessCycle &wc,
                                                            const std::vector<int> &odd);

/// The explicit K5 minor built from the pattern (any k >= 2), verified.
KuratowskiMinor k5_minor_from_reduction(const WitnessCycle &wc, const PathReduction &pr);

/// Three mutually conflicting bridges: keep at most 4 attachments per bridge,
/// contract bridges to hubs and arcs to edges (at most 15 vertices and 24
/// edges, asserted), find a minor by brute force, expand back.
KuratowskiMinor triangle_case(const WitnessCycle &wc, const std::array<int, 3> &bridge_ids);

/// End-to-end extraction; throws std::invalid_argument on planar input.
KuratowskiMinor find_kuratowski(const Graph &g);

} // namespace planar

#endif // PLANAR_KURATOWSKI_HPP
