/**
 * Optimal matchings, matching multifields and their coherence, support
 * sets, transversal matroids and related Hall-type predicates.
 */

#ifndef STIEFEL_BIPARTITE_HPP
#define STIEFEL_BIPARTITE_HPP

#include <map>
#include <optional>
#include <vector>

#include "stiefel/graph.hpp"
#include "stiefel/matroid.hpp"
#include "stiefel/trop.hpp"

namespace stiefel {

struct MinMatchings
{
    TropScalar value;                 // ∞ iff no supported matching exists
    std::vector<Matching> argmins;    // sorted
};

/**
 * Minimum weight matchings of all rows into the column set J (|J| = d).
 * Uses exhaustive search for d ≤ 8 and the assignment route above.
 */
MinMatchings min_matchings(const TropMatrix& a, const Subset& j);

/** Exhaustive search over supported matchings. */
MinMatchings min_matchings_exhaustive(const TropMatrix& a, const Subset& j);

/** Hungarian algorithm for the value and duals, then all perfect matchings on tight edges. */
MinMatchings min_matchings_assignment(const TropMatrix& a, const Subset& j);

/**
 * For every d-subset J of [n], a nonempty sorted set of matchings on J.
 */
class MatchingMultifield
{
    private:
        int d_ = 0;
        int n_ = 0;
        std::map<Subset, std::vector<Matching>> choices_;

    public:
        MatchingMultifield() = default;

        /** Checks that every J has a nonempty list of matchings with column set J. */
        MatchingMultifield(int d, int n, std::map<Subset, std::vector<Matching>> choices);

        int d() const { return d_; }
        int n() const { return n_; }
        const std::map<Subset, std::vector<Matching>>& choices() const { return choices_; }
        const std::vector<Matching>& at(const Subset& j) const { return choices_.at(j); }

        /** Union of the edges of all stored matchings. */
        BipartiteGraph support() const;

        friend bool operator==(const MatchingMultifield&, const MatchingMultifield&) = default;
};

/** Λ(A); throws NO_MATCHING_IN_SUPPORT if some J has no supported matching. */
MatchingMultifield matching_multifield(const TropMatrix& a);

/**
 * A matrix A with Λ(A) = lambda (supported on the multifield's support,
 * rows shifted so each row minimum is 0), or nullopt if lambda is incoherent.
 */
std::optional<TropMatrix> is_coherent(const MatchingMultifield& lambda);

/** |J_I| ≥ n − d + |I| for every nonempty I ⊆ [d]. */
bool hall_surplus_check(const BipartiteGraph& g);

/** hall_surplus_check and |J_i| = n − d + 1 for every row i. */
bool is_support_set(const BipartiteGraph& g);

/** All support sets on [d] ⊔ [n], sorted by edge list; BUDGET_EXCEEDED past budget candidates. */
std::vector<BipartiteGraph> enumerate_support_sets(int d, int n, std::size_t budget = 1000000);

/** Largest matching between rows and the columns in cols. */
int max_matching_size(const BipartiteGraph& g, Mask cols);

/** Bases: the d-subsets of columns matchable to all rows. */
Matroid transversal_matroid(const BipartiteGraph& g);

/** min over I ⊆ [d] of |S ∩ J_I| + d − |I|. */
int transversal_rank(const BipartiteGraph& g, Mask s);

/** |J_I| ≥ |I| + 1 for every nonempty I ⊆ [d]. */
bool dragon_condition(const BipartiteGraph& g);

/** |I_{J'}| ≥ |J'| + 1 for every nonempty J' ⊆ J. */
bool colwise_dragon_condition(const BipartiteGraph& g, Mask j);

/** All d + n vertices lie in one connected component. */
bool is_connected(const BipartiteGraph& g);

bool is_tree(const BipartiteGraph& g);

/** Every edge lies in a matching of all rows. */
bool every_edge_in_matching(const BipartiteGraph& g);

/**
 * A spanning tree of g in which every row vertex has degree ≥ 2.
 * Requires d < n, g connected and every edge in a matching (PRECONDITION).
 * A forest with all row degrees exactly 2 is found as a maximum common
 * independent set of the graphic matroid and a degree-2 partition matroid,
 * then completed greedily.
 */
BipartiteGraph spanning_tree_no_left_leaves(const BipartiteGraph& g);

/** First Betti number |E| − |V| + #components. */
int support_face_dimension(const BipartiteGraph& g);

}   // namespace stiefel

#endif
