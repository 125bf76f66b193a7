/**
 * Tropical hyperplane arrangements H(A) defined by the columns of A:
 * covectors of points, the covector complex TC(A), the subcomplexes B(A)
 * and K(A), transpose covectors and tropical singularity.
 *
 * Cell polyhedra live in ℝ^d with the gauge x_1 = 0 imposed as an
 * equality, so a full-dimensional cell has dimension d − 1.
 */

#ifndef STIEFEL_ARRANGEMENT_HPP
#define STIEFEL_ARRANGEMENT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "stiefel/geom.hpp"
#include "stiefel/graph.hpp"
#include "stiefel/trop.hpp"

namespace stiefel {

/** A covector τ ⊆ [d] × [n]; its tuple view is BipartiteGraph::tuple_string. */
using Covector = BipartiteGraph;

/** tc(x): (i,j) with a_ij finite and x_i + a_ij minimal in column j. */
Covector covector_of_point(const TropMatrix& a, const RVec& x);
Covector covector_of_point(const TropMatrix& a, const TropVector& x);

/** {(i,j0) : a_ij0 + y_j0 = min_j (a_ij + y_j)}; y finite of length n. */
BipartiteGraph transpose_covector(const TropMatrix& a, const TropVector& y);

/**
 * The closed cell {x : tc(x) ⊇ τ} with the gauge x_1 = 0. The inequalities
 * are x_k − x_i ≥ a_ij − a_kj for (i,j) ∈ τ and k ∈ I_j(supp A).
 */
Polyhedron cell_polyhedron(const TropMatrix& a, const Covector& tau, bool gauge = true);

struct ArrangementCell
{
    Covector covector;
    Polyhedron polyhedron;   // closed cell, gauge-fixed
    int dimension = -1;
    RVec interior_point;     // tc(interior_point) = covector
};

class ArrangementComplex
{
    private:
        TropMatrix a_;
        std::vector<ArrangementCell> cells_;   // sorted by covector

    public:
        ArrangementComplex() = default;
        ArrangementComplex(TropMatrix a, std::vector<ArrangementCell> cells);

        const TropMatrix& matrix() const { return a_; }
        const std::vector<ArrangementCell>& cells() const { return cells_; }
        std::size_t size() const { return cells_.size(); }

        /** Index of the cell with this covector, if any. */
        std::optional<std::size_t> find(const Covector& tau) const;
        bool contains(const Covector& tau) const { return find(tau).has_value(); }

        /** Covectors not strictly contained in another covector of the complex. */
        std::vector<Covector> maximal_covectors() const;

        /** Cell f lies in the closure of cell g (relative-interior point test). */
        bool face_of(std::size_t f, std::size_t g) const;
};

/**
 * TC(A) with one exact polyhedron per covector. Full-dimensional cells are
 * found by a pruned search over choice functions j ↦ i(j); lower cells are
 * faces of those. Requires no empty column, d ≤ 4 and n ≤ 8 unless
 * allow_large is set (BUDGET_EXCEEDED otherwise).
 */
ArrangementComplex enumerate_covectors(const TropMatrix& a, std::size_t budget = 100000,
                                       bool allow_large = false);

/** Every row has degree ≥ 1. */
bool in_B(const Covector& tau);

/** Dragon marriage condition on τ. */
bool in_K(const Covector& tau);

/** The tropical determinant is ∞ or attained by at least two permutations. */
bool is_trop_singular(const TropMatrix& b);

}   // namespace stiefel

#endif
