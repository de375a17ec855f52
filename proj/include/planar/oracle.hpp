#ifndef PLANAR_ORACLE_HPP
#define PLANAR_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "planar/embedding.hpp"
#include "planar/graph.hpp"
#include "planar/minor.hpp"

namespace planar {

// Brute-force references, deliberately sharing no algorithmic code with the
// embedding or minor-extraction pipeline beyond graph-core.

struct OracleOptions {
    bool override_guards = false;
};

/// Tutte's criterion: planar iff the conflict graph of every simple cycle is
/// bipartite. Exponential; guarded to n <= 10 unless overridden.
bool tutte_planarity(const Graph &g, const OracleOptions &opt = {});

/// Exhaustive search for a minor model with direct-edge adjacencies.
/// Guarded to n <= 16 unless overridden. Deterministic search order.
std::optional<MinorModel> brute_force_minor(const Graph &g, MinorModel::Kind kind,
                                            const OracleOptions &opt = {});

/// Checks branch sets disjoint/connected and all required adjacencies
/// realized by an edge or a recorded internally-disjoint path.
bool verify_minor(const Graph &g, const MinorModel &m);

/// Face-traces the rotation independently and checks the stored face list
/// matches and Euler's formula holds per connected component.
bool verify_embedding(const Graph &g, const PlanarEmbedding &pe);

/// All induced non-separating cycles in canonical order; n <= 12 guard.
std::vector<Cycle> enumerate_facelike_cycles(const Graph &g, const OracleOptions &opt = {});

/// Random maximal planar graph built by repeated face splits from K4,
/// together with the embedding built alongside. m = 3n-6, 3-connected.
std::pair<Graph, PlanarEmbedding> gen_triangulation(int n, std::uint64_t seed);

/// Uniform simple graph with n vertices and m edges.
Graph gen_gnm(int n, int m, std::uint64_t seed);

/// Brute-force 3-connectivity (min degree, connectivity, separating pairs).
bool is_triconnected(const Graph &g);

/// Enumerates simple cycles, invoking fn on each; stops early when fn
/// returns false. Canonical order: smallest vertex first, then smaller
/// second-vertex direction. Used by the Tutte oracle and face enumeration.
void for_each_cycle(const Graph &g, const std::function<bool(const Cycle &)> &fn);

} // namespace planar

#endif // PLANAR_ORACLE_HPP
