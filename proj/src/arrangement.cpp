#include "stiefel/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"

namespace stiefel {

namespace {

RVec unit_difference(int d, int plus, int minus)
{
    RVec v(d, Rational(0));
    v[plus] += 1;
    v[minus] -= 1;
    return v;
}

/** Dimension of {x : tc(x) = τ} from the equalities inside each column of τ. */
int open_cell_dimension(const TropMatrix& a, const Covector& tau)
{
    const int d = a.d();
    RMat rows;
    RVec gauge(d, Rational(0));
    gauge[0] = 1;
    rows.push_back(std::move(gauge));
    for (int j = 0; j < a.n(); ++j)
    {
        Subset rs = subset_of(tau.col_neighbors(j));
        for (std::size_t t = 1; t < rs.size(); ++t)
            rows.push_back(unit_difference(d, rs[t], rs[0]));
    }
    return d - matrix_rank(std::move(rows));
}

/** Strict system for a partial choice function on the first cols.size() columns. */
bool choice_feasible(const TropMatrix& a, const std::vector<int>& choice)
{
    const int d = a.d();
    LinearConstraintSystem sys(d);
    RVec gauge(d, Rational(0));
    gauge[0] = 1;
    sys.add_equality(std::move(gauge), 0);
    for (std::size_t j = 0; j < choice.size(); ++j)
    {
        const int i = choice[j];
        const int col = static_cast<int>(j);
        for (int k = 0; k < d; ++k)
        {
            if (k == i || a.at(k, col).is_infinite())
                continue;
            // x_i + a_ij < x_k + a_kj
            sys.add_strict(unit_difference(d, k, i), a.at(i, col).value() - a.at(k, col).value());
        }
    }
    return strict_feasible(sys).has_value();
}

}   // namespace

Covector covector_of_point(const TropMatrix& a, const RVec& x)
{
    if (static_cast<int>(x.size()) != a.d())
        throw Error("DIMENSION_MISMATCH", "point length differs from the number of rows");
    a.require_no_empty_column();
    std::vector<Edge> edges;
    for (int j = 0; j < a.n(); ++j)
    {
        TropScalar best;
        for (int i = 0; i < a.d(); ++i)
            best = oplus(best, a.at(i, j) + TropScalar(x[i]));
        for (int i = 0; i < a.d(); ++i)
            if (a.at(i, j).is_finite() && a.at(i, j) + TropScalar(x[i]) == best)
                edges.emplace_back(i, j);
    }
    return Covector(a.d(), a.n(), std::move(edges));
}

Covector covector_of_point(const TropMatrix& a, const TropVector& x)
{
    std::vector<Rational> v = x.finite_values();
    return covector_of_point(a, RVec(v.begin(), v.end()));
}

BipartiteGraph transpose_covector(const TropMatrix& a, const TropVector& y)
{
    if (static_cast<int>(y.size()) != a.n())
        throw Error("DIMENSION_MISMATCH", "vector length differs from the number of columns");
    a.require_no_empty_row();
    std::vector<Rational> v = y.finite_values();
    std::vector<Edge> edges;
    for (int i = 0; i < a.d(); ++i)
    {
        TropScalar best;
        for (int j = 0; j < a.n(); ++j)
            best = oplus(best, a.at(i, j) + TropScalar(v[j]));
        for (int j = 0; j < a.n(); ++j)
            if (a.at(i, j).is_finite() && a.at(i, j) + TropScalar(v[j]) == best)
                edges.emplace_back(i, j);
    }
    return BipartiteGraph(a.d(), a.n(), std::move(edges));
}

Polyhedron cell_polyhedron(const TropMatrix& a, const Covector& tau, bool gauge)
{
    const int d = a.d();
    if (tau.d() != d || tau.n() != a.n())
        throw Error("DIMENSION_MISMATCH", "covector and matrix sizes differ");
    if (!tau.is_subgraph_of(a.support()))
        throw Error("PRECONDITION", "covector leaves the support of the matrix");
    Polyhedron p(d);
    if (gauge)
    {
        RVec g(d, Rational(0));
        g[0] = 1;
        p.add_equality(std::move(g), 0);
    }
    for (const auto& [i, j] : tau.edges())
    {
        for (int k = 0; k < d; ++k)
        {
            if (k == i || a.at(k, j).is_infinite())
                continue;
            Rational rhs = a.at(i, j).value() - a.at(k, j).value();
            if (tau.has_edge(k, j))
            {
                if (k > i)
                    p.add_equality(unit_difference(d, k, i), rhs);
                continue;
            }
            p.add_inequality(unit_difference(d, k, i), rhs);
        }
    }
    return p;
}

ArrangementComplex::ArrangementComplex(TropMatrix a, std::vector<ArrangementCell> cells)
    : a_(std::move(a)), cells_(std::move(cells))
{
    std::sort(cells_.begin(), cells_.end(),
              [](const ArrangementCell& x, const ArrangementCell& y) { return x.covector < y.covector; });
}

std::optional<std::size_t> ArrangementComplex::find(const Covector& tau) const
{
    auto it = std::lower_bound(cells_.begin(), cells_.end(), tau,
                               [](const ArrangementCell& c, const Covector& t) { return c.covector < t; });
    if (it == cells_.end() || it->covector != tau)
        return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<Covector> ArrangementComplex::maximal_covectors() const
{
    std::vector<Covector> out;
    for (const auto& c : cells_)
    {
        bool maximal = true;
        for (const auto& o : cells_)
        {
            if (o.covector != c.covector && c.covector.is_subgraph_of(o.covector))
            {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(c.covector);
    }
    return out;
}

bool ArrangementComplex::face_of(std::size_t f, std::size_t g) const
{
    return cells_.at(g).polyhedron.contains(cells_.at(f).interior_point);
}

ArrangementComplex enumerate_covectors(const TropMatrix& a, std::size_t budget, bool allow_large)
{
    a.require_no_empty_column();
    const int d = a.d();
    const int n = a.n();
    if (!allow_large && (d > 4 || n > 8))
        throw Error("BUDGET_EXCEEDED", "covector enumeration is limited to d <= 4 and n <= 8");

    // Full-dimensional cells: choice functions whose strict system is feasible.
    std::vector<std::vector<int>> choices;
    std::vector<int> partial;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(partial.size()) == n)
        {
            choices.push_back(partial);
            if (choices.size() > budget)
                throw Error("BUDGET_EXCEEDED", "too many full-dimensional cells");
            return;
        }
        const int j = static_cast<int>(partial.size());
        for (int i = 0; i < d; ++i)
        {
            if (a.at(i, j).is_infinite())
                continue;
            partial.push_back(i);
            if (choice_feasible(a, partial))
                self(self);
            partial.pop_back();
        }
    };
    dfs(dfs);

    std::map<Covector, std::size_t> seen;
    std::vector<ArrangementCell> cells;
    std::deque<std::size_t> queue;
    auto add = [&](const RVec& x) {
        Covector tau = covector_of_point(a, x);
        if (seen.count(tau))
            return;
        if (cells.size() >= budget)
            throw Error("BUDGET_EXCEEDED", "covector enumeration exceeded its budget");
        ArrangementCell c;
        c.covector = tau;
        c.polyhedron = cell_polyhedron(a, tau);
        c.dimension = open_cell_dimension(a, tau);
        c.interior_point = x;
        seen.emplace(std::move(tau), cells.size());
        queue.push_back(cells.size());
        cells.push_back(std::move(c));
    };

    for (const auto& ch : choices)
    {
        std::vector<Edge> edges;
        for (int j = 0; j < n; ++j)
            edges.emplace_back(ch[j], j);
        auto x = relative_interior_point(cell_polyhedron(a, Covector(d, n, edges)));
        if (!x)
            throw Error("INTERNAL", "feasible choice function gave an empty cell");
        add(*x);
    }

    // Every facet of a closed cell is the locus where one more edge becomes tight.
    while (!queue.empty())
    {
        const std::size_t idx = queue.front();
        queue.pop_front();
        const Covector tau = cells[idx].covector;
        for (int j = 0; j < n; ++j)
        {
            for (int k = 0; k < d; ++k)
            {
                if (a.at(k, j).is_infinite() || tau.has_edge(k, j))
                    continue;
                std::vector<Edge> edges = tau.edges();
                edges.emplace_back(k, j);
                auto x = relative_interior_point(cell_polyhedron(a, Covector(d, n, std::move(edges))));
                if (x)
                    add(*x);
            }
        }
    }
    return ArrangementComplex(a, std::move(cells));
}

bool in_B(const Covector& tau)
{
    for (int i = 0; i < tau.d(); ++i)
        if (tau.row_degree(i) == 0)
            return false;
    return true;
}

bool in_K(const Covector& tau)
{
    return dragon_condition(tau);
}

bool is_trop_singular(const TropMatrix& b)
{
    if (b.d() != b.n())
        throw Error("DIMENSION_MISMATCH", "tropical singularity needs a square matrix");
    Subset all(b.n());
    for (int j = 0; j < b.n(); ++j)
        all[j] = j;
    MinMatchings m = min_matchings(b, all);
    return m.value.is_infinite() || m.argmins.size() >= 2;
}

}   // namespace stiefel
