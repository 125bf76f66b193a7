#include "stiefel/subdivision.hpp"

#include <algorithm>
#include <numeric>

#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"

namespace stiefel {

SelectedMatroid select_matroid(const PluckerVector& p, const TropVector& y)
{
    if (static_cast<int>(y.size()) != p.n())
        throw Error("DIMENSION_MISMATCH", "vector length differs from the ground set");
    std::vector<Rational> v = y.finite_values();
    auto subs = p.subsets();
    std::vector<Mask> bases;
    Rational best;
    bool have = false;
    for (std::size_t k = 0; k < subs.size(); ++k)
    {
        const TropScalar& pk = p.values()[k];
        if (pk.is_infinite())
            continue;
        Rational val = pk.value();
        for (int j : subs[k])
            val -= v[j];
        if (!have || val < best)
        {
            best = val;
            have = true;
            bases.clear();
        }
        if (val == best)
            bases.push_back(mask_of(subs[k]));
    }
    return SelectedMatroid{Matroid::from_masks(p.n(), p.d(), std::move(bases)), y, best};
}

SubdivisionFacets facets_of_D(const ArrangementComplex& tc)
{
    // A maximal mixed cell can meet the hypersimplex in a lower face only;
    // those intersections are faces of D(A) but not facets.
    const int full = transversal_matroid(tc.matrix().support()).polytope_dimension();
    SubdivisionFacets out;
    for (const auto& tau : tc.maximal_covectors())
    {
        Matroid m = transversal_matroid(tau);
        if (!m.empty() && m.polytope_dimension() == full)
            out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SubdivisionFacets facets_of_D(const TropMatrix& a, std::size_t budget)
{
    return facets_of_D(enumerate_covectors(a, budget));
}

Polyhedron transversal_polytope_ineqs(const BipartiteGraph& g)
{
    const int d = g.d();
    const int n = g.n();
    Polyhedron p(n);
    p.add_equality(RVec(n, Rational(1)), d);
    for (int j = 0; j < n; ++j)
    {
        RVec e(n, Rational(0));
        e[j] = 1;
        p.add_inequality(e, 0);
        p.add_upper(e, 1);
    }
    for (Mask rows = 1; rows <= full_mask(d); ++rows)
    {
        Mask cols = g.neighbors_of_rows(rows);
        RVec a(n, Rational(0));
        for (int j : subset_of(cols))
            a[j] = 1;
        p.add_inequality(std::move(a), popcount(rows));
    }
    return p;
}

bool is_interior_cell(const Matroid& m)
{
    if (m.empty())
        throw Error("PRECONDITION", "interiority is undefined for the empty matroid");
    return m.is_loopless() && m.is_coloop_free();
}

bool subdivisions_equal(const TropMatrix& a, const TropMatrix& b, std::size_t budget)
{
    return facets_of_D(a, budget) == facets_of_D(b, budget);
}

std::vector<SubdivisionCell> subdivision_cells(const PluckerVector& p, std::size_t budget)
{
    const int n = p.n();
    if (!underlying_matroid(p).is_connected())
        throw Error("PRECONDITION", "subdivision cells need a connected underlying matroid");
    // Variables (y_1, ..., y_n, c); p_B − y(B) − c ≥ 0 for every finite p_B.
    Polyhedron lifted(n + 1);
    RVec gauge(n + 1, Rational(0));
    gauge[0] = 1;
    lifted.add_equality(std::move(gauge), 0);
    std::vector<Mask> rows;
    auto subs = p.subsets();
    for (std::size_t k = 0; k < subs.size(); ++k)
    {
        if (p.values()[k].is_infinite())
            continue;
        RVec a(n + 1, Rational(0));
        for (int j : subs[k])
            a[j] = -1;
        a[n] = -1;
        lifted.add_inequality(std::move(a), -p.values()[k].value());
        rows.push_back(mask_of(subs[k]));
    }
    std::vector<SubdivisionCell> cells;
    for (const auto& f : enumerate_faces(lifted, budget))
    {
        if (f.tight.empty())
            continue;
        std::vector<Mask> bases;
        for (int k : f.tight)
            bases.push_back(rows[k]);
        SubdivisionCell c;
        c.matroid = Matroid::from_masks(n, p.d(), std::move(bases));
        c.dimension = c.matroid.polytope_dimension();
        c.y.assign(f.interior_point.begin(), f.interior_point.begin() + n);
        cells.push_back(std::move(c));
    }
    std::sort(cells.begin(), cells.end(), [](const SubdivisionCell& a, const SubdivisionCell& b) {
        if (a.dimension != b.dimension)
            return a.dimension > b.dimension;
        return a.matroid < b.matroid;
    });
    return cells;
}

namespace {

/** Leaves grouped into the branches at one internal node of the tree. */
using Branches = std::vector<Mask>;

/** The quartet {i,j,k,l} separates ij from kl: p_ij + p_kl is the unique largest pairing sum. */
bool separates(const PluckerVector& p, int i, int j, int k, int l)
{
    auto v = [&](int a, int b) { return p.at_mask((Mask(1) << a) | (Mask(1) << b)).value(); };
    Rational s1 = v(i, j) + v(k, l);
    return s1 > v(i, k) + v(j, l) && s1 > v(i, l) + v(j, k);
}

/** S | S^c with both sides of size ≥ 2 such that every quartet across it separates accordingly. */
bool is_split(const PluckerVector& p, Mask s)
{
    Subset in = subset_of(s);
    Subset out = subset_of(full_mask(p.n()) & ~s);
    for (std::size_t a = 0; a < in.size(); ++a)
        for (std::size_t b = a + 1; b < in.size(); ++b)
            for (std::size_t c = 0; c < out.size(); ++c)
                for (std::size_t e = c + 1; e < out.size(); ++e)
                    if (!separates(p, in[a], in[b], out[c], out[e]))
                        return false;
    return true;
}

/** Rank-2 matroid whose parallel classes are the branches. */
Matroid branch_matroid(int n, const Branches& branches)
{
    std::vector<Mask> bases;
    for (std::size_t a = 0; a < branches.size(); ++a)
        for (std::size_t b = a + 1; b < branches.size(); ++b)
            for (int i : subset_of(branches[a]))
                for (int j : subset_of(branches[b]))
                    bases.push_back((Mask(1) << i) | (Mask(1) << j));
    return Matroid::from_masks(n, 2, std::move(bases));
}

}   // namespace

std::vector<std::vector<int>> bounded_tree(const PluckerVector& p, std::vector<Matroid>* facets)
{
    if (p.d() != 2)
        throw Error("PRECONDITION", "bounded trees are built for rank 2 only");
    if (underlying_matroid(p) != Matroid::uniform(2, p.n()))
        throw Error("PRECONDITION", "bounded trees need a uniform underlying matroid");
    if (!check_plucker(p))
        throw Error("PRECONDITION", "bounded trees need a tropical Plücker vector");
    const int n = p.n();
    const Mask all = full_mask(n);

    // Splits are enumerated once per unordered pair, by the side avoiding element 0.
    std::vector<Mask> splits;
    for (Mask s = 1; s < all; ++s)
        if (!has(s, 0) && popcount(s) >= 2 && popcount(all & ~s) >= 2 && is_split(p, s))
            splits.push_back(s);

    // Refine the star one split at a time. Each split is a union of at least
    // two branches on either side at exactly one node.
    std::vector<Branches> nodes(1);
    for (int j = 0; j < n; ++j)
        nodes[0].push_back(Mask(1) << j);
    for (Mask s : splits)
    {
        bool placed = false;
        for (std::size_t v = 0; v < nodes.size() && !placed; ++v)
        {
            Branches inside, outside;
            bool straddles = false;
            for (Mask b : nodes[v])
            {
                if ((b & s) == b)
                    inside.push_back(b);
                else if ((b & s) == 0)
                    outside.push_back(b);
                else
                    straddles = true;
            }
            if (straddles || inside.size() < 2 || outside.size() < 2)
                continue;
            inside.push_back(all & ~s);
            outside.push_back(s);
            nodes[v] = std::move(inside);
            nodes.push_back(std::move(outside));
            placed = true;
        }
        if (!placed)
            throw Error("INTERNAL", "incompatible splits in a rank 2 Plücker vector");
    }

    std::vector<Matroid> tops;
    for (const auto& b : nodes)
        tops.push_back(branch_matroid(n, b));
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return tops[a] < tops[b]; });
    std::vector<int> index(nodes.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        index[order[k]] = static_cast<int>(k);

    // Two nodes are adjacent when a branch of one is the complement of a branch of the other.
    std::vector<std::vector<int>> adj(nodes.size());
    for (std::size_t u = 0; u < nodes.size(); ++u)
        for (std::size_t v = u + 1; v < nodes.size(); ++v)
            for (Mask b : nodes[u])
                if (std::find(nodes[v].begin(), nodes[v].end(), all & ~b) != nodes[v].end())
                {
                    adj[index[u]].push_back(index[v]);
                    adj[index[v]].push_back(index[u]);
                }
    for (auto& nb : adj)
        std::sort(nb.begin(), nb.end());
    if (facets)
    {
        facets->clear();
        for (std::size_t k : order)
            facets->push_back(tops[k]);
    }
    return adj;
}

bool is_path_graph(const std::vector<std::vector<int>>& adjacency)
{
    const std::size_t v = adjacency.size();
    if (v == 0)
        return false;
    std::size_t degree_sum = 0;
    for (const auto& nb : adjacency)
    {
        if (nb.size() > 2)
            return false;
        degree_sum += nb.size();
    }
    if (degree_sum != 2 * (v - 1))
        return false;
    std::vector<bool> seen(v, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty())
    {
        int u = stack.back();
        stack.pop_back();
        for (int w : adjacency[u])
        {
            if (!seen[w])
            {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == v;
}

}   // namespace stiefel
