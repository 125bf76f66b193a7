/**
 * Tropical Plücker vectors: the Stiefel map, the three-term relations,
 * duality, stable intersection and union, cocircuits and recovery of a
 * matrix from its maximal minors.
 */

#ifndef STIEFEL_PLUCKER_HPP
#define STIEFEL_PLUCKER_HPP

#include <map>
#include <string>
#include <vector>

#include "stiefel/graph.hpp"
#include "stiefel/matroid.hpp"
#include "stiefel/trop.hpp"

namespace stiefel {

/**
 * Values p_J for all d-subsets J of [n], stored in lexicographic order of J.
 * Never identically ∞.
 */
class PluckerVector
{
    private:
        int d_ = 0;
        int n_ = 0;
        std::vector<TropScalar> values_;

    public:
        PluckerVector() = default;
        PluckerVector(int d, int n, std::vector<TropScalar> values);

        /** Subsets missing from the map get ∞. */
        static PluckerVector from_map(int d, int n, const std::map<Subset, TropScalar>& values);

        int d() const { return d_; }
        int n() const { return n_; }
        const std::vector<TropScalar>& values() const { return values_; }

        const TropScalar& at(const Subset& j) const;
        const TropScalar& at_mask(Mask j) const;

        /** The d-subsets in storage order. */
        std::vector<Subset> subsets() const { return combinations(n_, d_); }

        /** Subtracts the value at the lexicographically least finite coordinate. */
        PluckerVector canonical() const;

        PluckerVector shifted(const Rational& c) const;

        /** Same support and a constant difference on it. */
        bool projectively_equal(const PluckerVector& other) const;

        std::string to_string() const;

        friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

/** p_J = tropical maximal minor of A on columns J; NO_MATCHING_IN_SUPPORT if all are ∞. */
PluckerVector stiefel_map(const TropMatrix& a);

/** Three-term tropical Plücker relations. */
bool check_plucker(const PluckerVector& p);

/** p*_S = p_{[n]∖S}. */
PluckerVector dual(const PluckerVector& p);

/** The rank-1 vector with values v_j. */
PluckerVector point_vector(const std::vector<TropScalar>& v);

/** The rank-0 vector on [n] (single entry 0 on the empty set). */
PluckerVector rank_zero(int n);

/** r_T = min over R ∩ S = T of p_R + q_S; needs d + e ≥ n. */
PluckerVector stable_intersection(const PluckerVector& p, const PluckerVector& q);

/** r_T = min over R ∪ S = T of p_R + q_S; needs d + e ≤ n. */
PluckerVector stable_union(const PluckerVector& p, const PluckerVector& q);

/** Stable union of the rows of A, folded left starting from the rank-0 vector. */
PluckerVector stable_union_of_rows(const TropMatrix& a);

/** Bases: the J with p_J finite. */
Matroid underlying_matroid(const PluckerVector& p);

/**
 * c_j = p_{S ∪ j} for j ∉ S and ∞ on S, for a (d−1)-subset S. The result is
 * checked to lie in L(p) with support a cocircuit of the underlying matroid.
 */
TropVector cocircuit(const PluckerVector& p, const Subset& s);

/**
 * Row i is cocircuit(p, [n] ∖ J_i(Σ)). Requires Σ a support set and a
 * uniform underlying matroid.
 */
TropMatrix recover_matrix(const PluckerVector& p, const BipartiteGraph& sigma);

}   // namespace stiefel

#endif
