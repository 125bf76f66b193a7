/**
 * Matroids given by an explicit basis list over [n] (n ≤ 12 in practice).
 * The empty matroid (no bases) is a valid value.
 */

#ifndef STIEFEL_MATROID_HPP
#define STIEFEL_MATROID_HPP

#include <compare>
#include <string>
#include <vector>

#include "stiefel/subset.hpp"

namespace stiefel {

class Matroid
{
    private:
        int n_ = 0;
        int rank_ = 0;
        std::vector<Mask> bases_;   // sorted by lexicographic order of the subsets

    public:
        Matroid() = default;

        /** Bases are deduplicated and sorted; each must have size rank. */
        Matroid(int n, int rank, const std::vector<Subset>& bases);
        static Matroid from_masks(int n, int rank, std::vector<Mask> bases);
        static Matroid uniform(int rank, int n);

        int n() const { return n_; }
        int rank() const { return rank_; }
        bool empty() const { return bases_.empty(); }
        std::size_t size() const { return bases_.size(); }

        std::vector<Subset> bases() const;
        const std::vector<Mask>& basis_masks() const { return bases_; }

        bool is_basis(Mask b) const;

        /** Elements in no basis (all of [n] for the empty matroid). */
        Mask loops() const;

        /** Elements in every basis (none for the empty matroid). */
        Mask coloops() const;

        bool is_loopless() const { return loops() == 0; }
        bool is_coloop_free() const { return coloops() == 0; }

        /** Rank of a subset: the largest intersection with a basis. */
        int rank_of(Mask s) const;

        /** Number of connected components (loops and coloops count singly). */
        int components() const;

        bool is_connected() const { return !empty() && components() == 1; }

        /** Dimension of the matroid base polytope, n − components; −1 if empty. */
        int polytope_dimension() const { return empty() ? -1 : n_ - components(); }

        /** C meets every basis, and no proper subset of C does. */
        bool is_cocircuit(Mask c) const;

        /** Every basis of this matroid is a basis of other. */
        bool is_contained_in(const Matroid& other) const;

        /** Checks the basis exchange axiom. */
        bool satisfies_exchange() const;

        /** "[[1,2],[1,3]]" */
        std::string to_string() const;

        friend bool operator==(const Matroid& a, const Matroid& b)
        {
            return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
        }

        friend std::strong_ordering operator<=>(const Matroid& a, const Matroid& b);
};

}   // namespace stiefel

#endif
