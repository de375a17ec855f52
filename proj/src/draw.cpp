#include "planar/draw.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace planar {

std::string draw_svg(const Graph &g, const PlanarEmbedding &pe, const DrawOptions &opt) {
    int n = g.vertex_count();
    std::vector<double> px(n, 0.0), py(n, 0.0);
    std::vector<char> fixed(n, 0);

    if (pe.faces.empty() && n > 0) throw std::invalid_argument("embedding has no faces");
    if (n > 0) {
        const auto &outer = pe.faces[pe.external];
        int L = static_cast<int>(outer.size());
        for (int i = 0; i < L; ++i) {
            double a = 2.0 * M_PI * i / L - M_PI / 2.0;
            px[outer[i]] = std::cos(a);
            py[outer[i]] = std::sin(a);
            fixed[outer[i]] = 1;
        }
        // Gauss-Seidel relaxation of interior vertices
        for (int it = 0; it < opt.max_iterations; ++it) {
            double max_disp = 0.0;
            for (int v = 0; v < n; ++v) {
                if (fixed[v] || g.degree(v) == 0) continue;
                double sx = 0.0, sy = 0.0;
                for (int e : g.incident(v)) {
                    int w = g.other_end(e, v);
                    sx += px[w];
                    sy += py[w];
                }
                sx /= g.degree(v);
                sy /= g.degree(v);
                max_disp = std::max(max_disp, std::hypot(sx - px[v], sy - py[v]));
                px[v] = sx;
                py[v] = sy;
            }
            if (max_disp < opt.tolerance) break;
        }
    }

    // map [-1,1] to the canvas
    double scale = (opt.size - 2 * opt.margin) / 2.0;
    auto X = [&](int v) { return opt.size / 2.0 + scale * px[v]; };
    auto Y = [&](int v) { return opt.size / 2.0 + scale * py[v]; };

    std::ostringstream svg;
    char buf[256];
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  opt.size, opt.size, opt.size, opt.size);
    svg << buf;
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        std::snprintf(buf, sizeof(buf),
                      "  <line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" "
                      "stroke=\"black\" stroke-width=\"1.5\"/>\n",
                      X(g.edge(e).u), Y(g.edge(e).u), X(g.edge(e).v), Y(g.edge(e).v));
        svg << buf;
    }
    for (int v = 0; v < n; ++v) {
        std::snprintf(buf, sizeof(buf),
                      "  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"4\" fill=\"#1f77b4\"/>\n", X(v),
                      Y(v));
        svg << buf;
        if (opt.labels) {
            std::snprintf(buf, sizeof(buf),
                          "  <text x=\"%.4f\" y=\"%.4f\" font-size=\"12\" "
                          "font-family=\"sans-serif\">%d</text>\n",
                          X(v) + 6.0, Y(v) - 6.0, v);
            svg << buf;
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace planar
