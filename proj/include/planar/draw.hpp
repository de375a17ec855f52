#ifndef PLANAR_DRAW_HPP
#define PLANAR_DRAW_HPP

#include <string>

#include "planar/embedding.hpp"
#include "planar/graph.hpp"

namespace planar {

struct DrawOptions {
    double size = 800.0;
    double margin = 40.0;
    double tolerance = 1e-7;
    int max_iterations = 100000;
    bool labels = false;
};

/// Straight-line drawing: the external face is pinned to a regular polygon
/// and interior vertices relax to the average of their neighbors. Output is
/// an SVG 1.1 document.
std::string draw_svg(const Graph &g, const PlanarEmbedding &pe, const DrawOptions &opt = {});

} // namespace planar

#endif // PLANAR_DRAW_HPP
