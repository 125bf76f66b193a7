#include "stiefel/graph.hpp"

#include <algorithm>

#include "stiefel/error.hpp"

namespace stiefel {

BipartiteGraph::BipartiteGraph(int d, int n, std::vector<Edge> edges)
    : d_(d), n_(n), edges_(std::move(edges)), row_nbrs_(d, 0), col_nbrs_(n, 0)
{
    if (d < 0 || n < 0 || d > kMaxGround || n > kMaxGround)
        throw Error("DIMENSION_MISMATCH", "graph side sizes out of range");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [i, j] : edges_)
    {
        if (i < 0 || i >= d || j < 0 || j >= n)
            throw Error("DIMENSION_MISMATCH", "edge endpoint out of range");
        row_nbrs_[i] |= Mask(1) << j;
        col_nbrs_[j] |= Mask(1) << i;
    }
}

BipartiteGraph BipartiteGraph::from_one_based(int d, int n, const std::vector<Edge>& edges)
{
    std::vector<Edge> e;
    e.reserve(edges.size());
    for (auto [i, j] : edges)
        e.emplace_back(i - 1, j - 1);
    return BipartiteGraph(d, n, std::move(e));
}

BipartiteGraph BipartiteGraph::complete(int d, int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j)
            e.emplace_back(i, j);
    return BipartiteGraph(d, n, std::move(e));
}

Mask BipartiteGraph::neighbors_of_rows(Mask rows) const
{
    Mask out = 0;
    for (int i = 0; i < d_; ++i)
        if (has(rows, i))
            out |= row_nbrs_[i];
    return out;
}

Mask BipartiteGraph::neighbors_of_cols(Mask cols) const
{
    Mask out = 0;
    for (int j = 0; j < n_; ++j)
        if (has(cols, j))
            out |= col_nbrs_[j];
    return out;
}

bool BipartiteGraph::is_subgraph_of(const BipartiteGraph& other) const
{
    if (d_ != other.d_ || n_ != other.n_)
        return false;
    for (int i = 0; i < d_; ++i)
        if ((row_nbrs_[i] & ~other.row_nbrs_[i]) != 0)
            return false;
    return true;
}

BipartiteGraph BipartiteGraph::restrict_columns(Mask cols) const
{
    std::vector<Edge> e;
    for (auto [i, j] : edges_)
        if (has(cols, j))
            e.emplace_back(i, j);
    return BipartiteGraph(d_, n_, std::move(e));
}

std::string BipartiteGraph::to_string() const
{
    std::string out = "{";
    for (std::size_t k = 0; k < edges_.size(); ++k)
    {
        if (k)
            out += ',';
        out += "(" + std::to_string(edges_[k].first + 1) + "," + std::to_string(edges_[k].second + 1) + ")";
    }
    return out + "}";
}

std::string BipartiteGraph::tuple_string() const
{
    std::string out = "(";
    for (int j = 0; j < n_; ++j)
    {
        if (j)
            out += ',';
        out += "{" + format_subset(subset_of(col_nbrs_[j])) + "}";
    }
    return out + ")";
}

BipartiteGraph graph_from_tuple(int d, const std::vector<std::vector<int>>& rows_per_column)
{
    std::vector<Edge> e;
    for (std::size_t j = 0; j < rows_per_column.size(); ++j)
        for (int i : rows_per_column[j])
            e.emplace_back(i - 1, static_cast<int>(j));
    return BipartiteGraph(d, static_cast<int>(rows_per_column.size()), std::move(e));
}

Subset Matching::column_set() const
{
    Subset s = cols;
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Edge> Matching::edges() const
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < cols.size(); ++i)
        e.emplace_back(static_cast<int>(i), cols[i]);
    return e;
}

BipartiteGraph Matching::as_graph(int n) const
{
    return BipartiteGraph(static_cast<int>(cols.size()), n, edges());
}

std::string Matching::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < cols.size(); ++i)
    {
        if (i)
            out += ',';
        out += "(" + std::to_string(i + 1) + "," + std::to_string(cols[i] + 1) + ")";
    }
    return out + "}";
}

}   // namespace stiefel
