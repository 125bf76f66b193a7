/**
 * Bipartite graphs on [d] ⊔ [n] and matchings.
 *
 * Vertices are 0-based; text output is 1-based, edges as (row, column).
 */

#ifndef STIEFEL_GRAPH_HPP
#define STIEFEL_GRAPH_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "stiefel/subset.hpp"

namespace stiefel {

using Edge = std::pair<int, int>;

class BipartiteGraph
{
    private:
        int d_ = 0;
        int n_ = 0;
        std::vector<Edge> edges_;
        std::vector<Mask> row_nbrs_;
        std::vector<Mask> col_nbrs_;

    public:
        BipartiteGraph() = default;

        /** Edges are sorted and deduplicated; out-of-range endpoints throw. */
        BipartiteGraph(int d, int n, std::vector<Edge> edges);

        static BipartiteGraph from_one_based(int d, int n, const std::vector<Edge>& edges);
        static BipartiteGraph complete(int d, int n);

        int d() const { return d_; }
        int n() const { return n_; }
        const std::vector<Edge>& edges() const { return edges_; }
        std::size_t size() const { return edges_.size(); }

        bool has_edge(int i, int j) const { return has(row_nbrs_[i], j); }

        /** J_i: columns adjacent to row i. */
        Mask row_neighbors(int i) const { return row_nbrs_[i]; }

        /** I_j: rows adjacent to column j. */
        Mask col_neighbors(int j) const { return col_nbrs_[j]; }

        /** J_I for a set of rows I. */
        Mask neighbors_of_rows(Mask rows) const;

        /** I_J for a set of columns J. */
        Mask neighbors_of_cols(Mask cols) const;

        int row_degree(int i) const { return popcount(row_nbrs_[i]); }
        int col_degree(int j) const { return popcount(col_nbrs_[j]); }

        bool is_subgraph_of(const BipartiteGraph& other) const;

        /** Subgraph keeping the edges whose column lies in cols. */
        BipartiteGraph restrict_columns(Mask cols) const;

        /** "{(1,1),(2,3)}" */
        std::string to_string() const;

        /** "({1},{1,2},...)", one row set per column. */
        std::string tuple_string() const;

        friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b)
        {
            return a.d_ == b.d_ && a.n_ == b.n_ && a.edges_ == b.edges_;
        }

        friend std::strong_ordering operator<=>(const BipartiteGraph& a, const BipartiteGraph& b)
        {
            if (auto c = a.d_ <=> b.d_; c != 0)
                return c;
            if (auto c = a.n_ <=> b.n_; c != 0)
                return c;
            return a.edges_ <=> b.edges_;
        }
};

/**
 * Builds a graph from per-column row sets, the tuple view (I_1, ..., I_n)
 * of a covector. Rows are 1-based.
 */
BipartiteGraph graph_from_tuple(int d, const std::vector<std::vector<int>>& rows_per_column);

/**
 * A matching of all rows: cols[i] is the column matched to row i.
 */
struct Matching
{
    std::vector<int> cols;

    Subset column_set() const;
    std::vector<Edge> edges() const;
    BipartiteGraph as_graph(int n) const;
    std::string to_string() const;

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;
};

}   // namespace stiefel

#endif
