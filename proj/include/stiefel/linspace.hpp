/**
 * Tropical linear spaces L(p) and the Stiefel case L(A) = L(π(A)):
 * membership, decomposition into images of arrangement cells plus
 * orthants, boundedness and the bounded complex.
 */

#ifndef STIEFEL_LINSPACE_HPP
#define STIEFEL_LINSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "stiefel/arrangement.hpp"
#include "stiefel/geom.hpp"
#include "stiefel/plucker.hpp"
#include "stiefel/trop.hpp"

namespace stiefel {

/**
 * For every (d+1)-subset J, min over j ∈ J of p_{J−j} + y_j is ∞ or
 * attained at least twice. Entries of y may be ∞.
 */
bool contains(const PluckerVector& p, const TropVector& y);

/** The matroid selected by y is loopless; y finite. */
bool contains_via_matroid(const PluckerVector& p, const TropVector& y);

/**
 * y = x ⊙ A + slack with x in the closed cell of covector, slack zero off J
 * and positive on J.
 */
struct DecompositionCertificate
{
    Covector covector;
    RVec x;
    Subset j;
    RVec slack;
};

/** Checks every field of a certificate against A and y exactly. */
bool verify_certificate(const TropMatrix& a, const TropVector& y, const DecompositionCertificate& cert);

/**
 * Searches the pairs (F, J) with F ∈ B(A) and J satisfying the column-wise
 * dragon condition on tc(F), in order of (covector, J). Holds TC(A) so that
 * many vectors can be tested against one matrix.
 */
class Decomposer
{
    private:
        ArrangementComplex tc_;
        std::vector<std::size_t> cells_;                // indices of B(A) cells
        std::vector<std::vector<Subset>> candidates_;   // admissible J per cell, sorted

    public:
        explicit Decomposer(ArrangementComplex tc);
        explicit Decomposer(const TropMatrix& a, std::size_t budget = 100000);

        const ArrangementComplex& complex() const { return tc_; }

        /** The first certificate, or nullopt when y ∉ L(A); y finite. */
        std::optional<DecompositionCertificate> decompose(const TropVector& y) const;

        /** Feasibility of a single pair (F, J). */
        std::optional<DecompositionCertificate> try_pair(const Covector& f, const Subset& j,
                                                         const TropVector& y) const;
};

std::optional<DecompositionCertificate> decompose(const TropMatrix& a, const TropVector& y,
                                                  std::size_t budget = 100000);

/**
 * y is in the bounded part of L(p): y ∈ L(p) and the selected matroid has
 * no coloops. Requires a uniform underlying matroid (PRECONDITION).
 */
bool bounded_membership(const PluckerVector& p, const TropVector& y);

/**
 * The same test through perturbations: y ∈ L(p) and y − εe_j ∉ L(p) for
 * every j, with ε a formal infinitesimal.
 */
bool bounded_membership_perturbed(const PluckerVector& p, const TropVector& y);

/** y − εe_j ∈ L(p) for a formal infinitesimal ε > 0. */
bool contains_perturbed(const PluckerVector& p, const TropVector& y, int j);

/**
 * Image of the closed cell of a B(A) covector under ⊙A, as a polyhedron in
 * ℝ^n (not gauge-fixed, so it contains the line ℝ·𝟙).
 */
Polyhedron image_polyhedron(const TropMatrix& a, const Covector& tau);

struct BoundedCell
{
    Covector covector;
    int dimension = -1;   // gauge-fixed dimension of the cell
    Polyhedron image;
    TropVector image_point;   // image of the cell's interior point
};

/** Some subgraph of the support of A is a support set. */
bool support_contains_support_set(const TropMatrix& a);

/**
 * The cells of K(A) with their images under ⊙A. Requires the support of A to
 * contain a support set (PRECONDITION).
 */
std::vector<BoundedCell> bounded_complex(const TropMatrix& a, std::size_t budget = 100000);
std::vector<BoundedCell> bounded_complex(const ArrangementComplex& tc);

/**
 * For d = 2: the vertices and edges of K(A) form a single point or a path.
 */
bool caterpillar_check(const TropMatrix& a);

/**
 * The term F ⊙ A + ℝ≥0{e_j : j ∈ J} as a lifted polyhedron over (x, y) ∈
 * ℝ^d × ℝ^n; its projection to y is the term itself. x lies in the closed
 * cell of F, y_j = (x ⊙ A)_j off J and y_j ≥ (x ⊙ A)_j on J.
 */
Polyhedron lifted_term(const TropMatrix& a, const Covector& f, const Subset& j);

/**
 * Several lifted terms sharing the y coordinates: variables
 * (x^1, ..., x^k, y). Projects to the intersection of the terms.
 */
Polyhedron lifted_intersection(const TropMatrix& a, const std::vector<std::pair<Covector, Subset>>& terms);

/** Dimension of the projection of a lifted polyhedron onto its last n coordinates. */
int projected_dimension(const Polyhedron& lifted, int n);

/**
 * y lies in the relative interior of the projection of a lifted
 * polyhedron onto its last n coordinates.
 */
bool in_projected_relative_interior(const Polyhedron& lifted, const RVec& y);

}   // namespace stiefel

#endif
