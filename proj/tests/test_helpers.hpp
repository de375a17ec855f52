#ifndef PLANAR_TEST_HELPERS_HPP
#define PLANAR_TEST_HELPERS_HPP

#include <vector>

#include "planar/graph.hpp"

namespace planar::testing {

// Cycle of 4k+2 vertices plus the 2k+1 chords (2i, 2i+3); its conflict graph
// w.r.t. the big cycle is an induced (2k+1)-cycle. k = 4 gives the 18-vertex
// instance whose conflict graph is the 9-cycle.
inline Graph interleaved_chord_cycle(int k) {
    int n = 4 * k + 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    for (int i = 0; i <= 2 * k; ++i) pairs.emplace_back(2 * i, (2 * i + 3) % n);
    return Graph::build(n, pairs);
}

// Same structure with each chord subdivided into a two-edge path, so every
// bridge is a component bridge rather than a chord.
inline Graph interleaved_path_cycle(int k) {
    int n = 4 * k + 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i <= 2 * k; ++i) {
        int mid = n + i;
        pairs.emplace_back(2 * i, mid);
        pairs.emplace_back(mid, (2 * i + 3) % n);
    }
    std::vector<std::pair<int, int>> ring;
    for (int i = 0; i < n; ++i) ring.emplace_back(i, (i + 1) % n);
    ring.insert(ring.end(), pairs.begin(), pairs.end());
    return Graph::build(n + 2 * k + 1, ring);
}

} // namespace planar::testing

#endif
