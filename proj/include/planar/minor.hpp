#ifndef PLANAR_MINOR_HPP
#define PLANAR_MINOR_HPP

#include <vector>

namespace planar {

/// A Kuratowski minor model: disjoint connected branch sets (5 for K5, 6 for
/// K33 in part order L0,L1,L2,R0,R1,R2) plus optional connecting paths for
/// adjacencies not realized by a direct edge. Paths are vertex walks whose
/// endpoints lie in the two branch sets they join and whose interiors avoid
/// all branch sets and other paths.
struct MinorModel {
    enum class Kind { K5, K33 };
    Kind kind = Kind::K5;
    std::vector<std::vector<int>> branch_sets;
    std::vector<std::vector<int>> paths;
};

using KuratowskiMinor = MinorModel;

} // namespace planar

#endif // PLANAR_MINOR_HPP
