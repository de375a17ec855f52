#ifndef PLANAR_IO_HPP
#define PLANAR_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "planar/decompose.hpp"
#include "planar/embed.hpp"
#include "planar/graph.hpp"
#include "planar/minor.hpp"

namespace planar {

// Edge-list text format: first line "n m", then m lines "u v" (0-based);
// '#' starts a comment, blank lines are skipped.
Graph read_edge_list(std::istream &in);
std::string write_edge_list(const Graph &g);

// Undirected simple DOT: graph NAME { a -- b; c; } with integer or name ids
// mapped to 0..n-1 in order of first appearance. Directed input is rejected.
Graph read_dot(std::istream &in);

// {"n": int, "edges": [[u,v], ...]}
Graph read_graph_json(std::istream &in);

nlohmann::json graph_to_json(const Graph &g);

nlohmann::json embedding_to_json(const Graph &g, const PlanarEmbedding &pe);
PlanarEmbedding embedding_from_json(const nlohmann::json &j);

nlohmann::json minor_to_json(const MinorModel &m);
MinorModel minor_from_json(const nlohmann::json &j);

nlohmann::json evidence_to_json(const NonPlanarEvidence &ev);

nlohmann::json decompose_to_json(const Graph &g);

} // namespace planar

#endif // PLANAR_IO_HPP
