/**
 * Regular matroid subdivisions D(p) and D(A): selected matroids, facets via
 * maximal covectors, transversal matroid polytopes and interior cells.
 */

#ifndef STIEFEL_SUBDIVISION_HPP
#define STIEFEL_SUBDIVISION_HPP

#include <vector>

#include "stiefel/arrangement.hpp"
#include "stiefel/geom.hpp"
#include "stiefel/matroid.hpp"
#include "stiefel/plucker.hpp"

namespace stiefel {

struct SelectedMatroid
{
    Matroid matroid;    // bases minimize p_J − y(J)
    TropVector y;
    Rational value;     // the minimum
};

/** M_y; y must be finite of length n. */
SelectedMatroid select_matroid(const PluckerVector& p, const TropVector& y);

/** Facet matroids of D(A), sorted and deduplicated. */
using SubdivisionFacets = std::vector<Matroid>;

/**
 * Transversal matroids of the containment-maximal covectors of TC(A) whose
 * polytope has the dimension of the underlying matroid polytope. Empty and
 * lower-dimensional ones are dropped.
 */
SubdivisionFacets facets_of_D(const TropMatrix& a, std::size_t budget = 100000);
SubdivisionFacets facets_of_D(const ArrangementComplex& tc);

/**
 * {x ∈ ℝ^n : Σx = d, 0 ≤ x ≤ 1, Σ_{j ∈ J_I} x_j ≥ |I| for nonempty I ⊆ [d]}.
 * Its 0/1 points are the basis indicators of the transversal matroid of g.
 */
Polyhedron transversal_polytope_ineqs(const BipartiteGraph& g);

/** No loops and no coloops; PRECONDITION on the empty matroid. */
bool is_interior_cell(const Matroid& m);

/** facets_of_D(a) = facets_of_D(b). */
bool subdivisions_equal(const TropMatrix& a, const TropMatrix& b, std::size_t budget = 100000);

/** A cell of D(p) with a selecting vector in its relative interior. */
struct SubdivisionCell
{
    Matroid matroid;
    int dimension = -1;   // of the matroid polytope
    RVec y;               // selects exactly this matroid
};

/**
 * All cells of D(p) for a Plücker vector whose underlying matroid is
 * connected, computed from the faces of the lifted dual polyhedron
 * {(y, c) : y(B) + c ≤ p_B, y_1 = 0}. Sorted by decreasing dimension, then by
 * matroid.
 */
std::vector<SubdivisionCell> subdivision_cells(const PluckerVector& p, std::size_t budget = 100000);

/**
 * The bounded tree of a rank-2 Plücker vector with uniform underlying
 * matroid: vertices are the facets of D(p), edges the interior cells of
 * codimension one. Built from the quartet splits of p; the facet at a node
 * has the node's branches as parallel classes. Returns adjacency lists over
 * the facets in sorted order.
 */
std::vector<std::vector<int>> bounded_tree(const PluckerVector& p, std::vector<Matroid>* facets = nullptr);

/** A connected graph whose vertices all have degree ≤ 2 and with no cycle: a point or a path. */
bool is_path_graph(const std::vector<std::vector<int>>& adjacency);

}   // namespace stiefel

#endif
