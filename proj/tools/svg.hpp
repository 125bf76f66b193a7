/**
 * Best-effort SVG drawings: arrangements for d ≤ 3 and rank-2 bounded trees.
 */

#ifndef STIEFEL_TOOLS_SVG_HPP
#define STIEFEL_TOOLS_SVG_HPP

#include <string>
#include <vector>

#include "stiefel/arrangement.hpp"
#include "stiefel/matroid.hpp"

namespace stiefel::svg {

/** The arrangement in gauge-fixed coordinates (x_2, x_3), cells labelled by covector. */
std::string arrangement(const ArrangementComplex& tc);

/** Facets as nodes, interior walls as edges. */
std::string tree(const std::vector<std::vector<int>>& adjacency, const std::vector<Matroid>& facets);

}   // namespace stiefel::svg

#endif
