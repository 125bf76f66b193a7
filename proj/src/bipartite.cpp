#include "stiefel/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "stiefel/error.hpp"
#include "stiefel/geom.hpp"

namespace stiefel {

namespace {

class UnionFind
{
    private:
        std::vector<int> parent_;

    public:
        explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

        int find(int x)
        {
            while (parent_[x] != x)
            {
                parent_[x] = parent_[parent_[x]];
                x = parent_[x];
            }
            return x;
        }

        bool unite(int a, int b)
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            parent_[a] = b;
            return true;
        }
};

/** Kuhn's augmenting paths restricted to the given rows and columns. */
int kuhn(const BipartiteGraph& g, Mask rows, Mask cols)
{
    std::vector<int> match_col(g.n(), -1);
    std::function<bool(int, Mask&)> augment = [&](int i, Mask& visited) {
        Mask nb = g.row_neighbors(i) & cols;
        for (int j : subset_of(nb))
        {
            if (has(visited, j))
                continue;
            visited |= Mask(1) << j;
            if (match_col[j] < 0 || augment(match_col[j], visited))
            {
                match_col[j] = i;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int i = 0; i < g.d(); ++i)
    {
        if (!has(rows, i))
            continue;
        Mask visited = 0;
        if (augment(i, visited))
            ++size;
    }
    return size;
}

void check_column_set(const TropMatrix& a, const Subset& j)
{
    if (static_cast<int>(j.size()) != a.d())
        throw Error("DIMENSION_MISMATCH", "column set must have exactly d elements");
    for (std::size_t k = 0; k < j.size(); ++k)
        if (j[k] < 0 || j[k] >= a.n() || (k && j[k] <= j[k - 1]))
            throw Error("DIMENSION_MISMATCH", "column set must be sorted and inside [n]");
}

/** All matchings of all rows onto exactly the columns of cols, using edges of g. */
std::vector<Matching> perfect_matchings(const BipartiteGraph& g, Mask cols)
{
    std::vector<Matching> out;
    Matching cur;
    cur.cols.assign(g.d(), -1);
    std::function<void(int, Mask)> rec = [&](int i, Mask used) {
        if (i == g.d())
        {
            out.push_back(cur);
            return;
        }
        for (int j : subset_of(g.row_neighbors(i) & cols & ~used))
        {
            cur.cols[i] = j;
            rec(i + 1, used | (Mask(1) << j));
        }
    };
    if (popcount(cols) == g.d())
        rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Rational matching_weight(const TropMatrix& a, const Matching& m)
{
    Rational w = 0;
    for (std::size_t i = 0; i < m.cols.size(); ++i)
        w += a.at(static_cast<int>(i), m.cols[i]).value();
    return w;
}

}   // namespace

MinMatchings min_matchings_exhaustive(const TropMatrix& a, const Subset& j)
{
    check_column_set(a, j);
    MinMatchings res;
    Matching cur;
    cur.cols.assign(a.d(), -1);
    std::function<void(int, Mask, const Rational&)> rec = [&](int i, Mask used, const Rational& sum) {
        if (i == a.d())
        {
            TropScalar v(sum);
            if (v < res.value)
            {
                res.value = v;
                res.argmins.clear();
            }
            if (v == res.value)
                res.argmins.push_back(cur);
            return;
        }
        for (int c : j)
        {
            if (has(used, c) || !a.at(i, c).is_finite())
                continue;
            cur.cols[i] = c;
            rec(i + 1, used | (Mask(1) << c), sum + a.at(i, c).value());
        }
    };
    rec(0, 0, Rational(0));
    std::sort(res.argmins.begin(), res.argmins.end());
    return res;
}

MinMatchings min_matchings_assignment(const TropMatrix& a, const Subset& j)
{
    check_column_set(a, j);
    const int d = a.d();
    MinMatchings res;
    Mask cols = mask_of(j);
    BipartiteGraph supp = a.support();
    if (kuhn(supp, full_mask(d), cols) < d)
        return res;

    // Unsupported entries get a penalty larger than any gap between
    // supported matchings, so the optimum avoids them.
    Rational total = 0;
    for (int i = 0; i < d; ++i)
        for (int c : j)
            if (a.at(i, c).is_finite())
                total += abs(a.at(i, c).value());
    Rational big = 2 * total + 1;
    auto cost = [&](int i, int k) -> Rational {
        const TropScalar& e = a.at(i - 1, j[k - 1]);
        return e.is_finite() ? e.value() : big;
    };

    // Hungarian method, 1-based, square d × d.
    std::vector<Rational> u(d + 1, Rational(0)), v(d + 1, Rational(0));
    std::vector<int> p(d + 1, 0), way(d + 1, 0);
    for (int i = 1; i <= d; ++i)
    {
        p[0] = i;
        int j0 = 0;
        std::vector<Rational> minv(d + 1);
        std::vector<bool> minv_set(d + 1, false), used(d + 1, false);
        do
        {
            used[j0] = true;
            int i0 = p[j0];
            int j1 = -1;
            Rational delta;
            for (int k = 1; k <= d; ++k)
            {
                if (used[k])
                    continue;
                Rational cur = cost(i0, k) - u[i0] - v[k];
                if (!minv_set[k] || cur < minv[k])
                {
                    minv[k] = cur;
                    minv_set[k] = true;
                    way[k] = j0;
                }
                if (j1 < 0 || minv[k] < delta)
                {
                    delta = minv[k];
                    j1 = k;
                }
            }
            for (int k = 0; k <= d; ++k)
            {
                if (used[k])
                {
                    u[p[k]] += delta;
                    v[k] -= delta;
                }
                else
                {
                    minv[k] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do
        {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    // Every optimal matching is tight for these optimal duals.
    std::vector<Edge> tight;
    for (int i = 1; i <= d; ++i)
        for (int k = 1; k <= d; ++k)
            if (a.at(i - 1, j[k - 1]).is_finite() && u[i] + v[k] == cost(i, k))
                tight.emplace_back(i - 1, j[k - 1]);
    BipartiteGraph tg(d, a.n(), tight);
    res.argmins = perfect_matchings(tg, cols);
    if (res.argmins.empty())
        throw Error("INTERNAL", "assignment duals admit no tight perfect matching");
    res.value = TropScalar(matching_weight(a, res.argmins.front()));
    return res;
}

MinMatchings min_matchings(const TropMatrix& a, const Subset& j)
{
    return a.d() <= 8 ? min_matchings_exhaustive(a, j) : min_matchings_assignment(a, j);
}

MatchingMultifield::MatchingMultifield(int d, int n, std::map<Subset, std::vector<Matching>> choices)
    : d_(d), n_(n), choices_(std::move(choices))
{
    if (static_cast<long long>(choices_.size()) != binomial(n, d))
        throw Error("PRECONDITION", "a multifield needs matchings on every d-subset");
    for (auto& [j, ms] : choices_)
    {
        if (static_cast<int>(j.size()) != d || ms.empty())
            throw Error("PRECONDITION", "each d-subset needs a nonempty set of matchings");
        for (const auto& m : ms)
            if (static_cast<int>(m.cols.size()) != d || m.column_set() != j)
                throw Error("PRECONDITION", "stored matching does not cover its column set");
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    }
}

BipartiteGraph MatchingMultifield::support() const
{
    std::vector<Edge> e;
    for (const auto& [j, ms] : choices_)
        for (const auto& m : ms)
            for (auto ed : m.edges())
                e.push_back(ed);
    return BipartiteGraph(d_, n_, std::move(e));
}

MatchingMultifield matching_multifield(const TropMatrix& a)
{
    std::map<Subset, std::vector<Matching>> choices;
    for (const auto& j : combinations(a.n(), a.d()))
    {
        MinMatchings mm = min_matchings(a, j);
        if (mm.argmins.empty())
            throw Error("NO_MATCHING_IN_SUPPORT",
                        "no supported matching on columns {" + format_subset(j) + "}");
        choices.emplace(j, std::move(mm.argmins));
    }
    return MatchingMultifield(a.d(), a.n(), std::move(choices));
}

std::optional<TropMatrix> is_coherent(const MatchingMultifield& lambda)
{
    const int d = lambda.d();
    const int n = lambda.n();
    BipartiteGraph supp = lambda.support();
    const int nv = static_cast<int>(supp.size());
    std::vector<int> var(static_cast<std::size_t>(d) * n, -1);
    for (int k = 0; k < nv; ++k)
        var[static_cast<std::size_t>(supp.edges()[k].first) * n + supp.edges()[k].second] = k;
    auto weight_row = [&](const Matching& m) {
        RVec row(nv, Rational(0));
        for (int i = 0; i < d; ++i)
            row[var[static_cast<std::size_t>(i) * n + m.cols[i]]] += 1;
        return row;
    };
    auto diff = [](RVec a, const RVec& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            a[k] -= b[k];
        return a;
    };

    LinearConstraintSystem sys(nv);
    for (const auto& [j, chosen] : lambda.choices())
    {
        RVec w0 = weight_row(chosen.front());
        for (std::size_t k = 1; k < chosen.size(); ++k)
            sys.add_equality(diff(weight_row(chosen[k]), w0), 0);
        for (const auto& m : perfect_matchings(supp, mask_of(j)))
            if (!std::binary_search(chosen.begin(), chosen.end(), m))
                sys.add_strict(diff(weight_row(m), w0), 0);
    }
    std::optional<RVec> w = strict_feasible(sys);
    if (!w)
        return std::nullopt;

    // Row shifts preserve the multifield; normalize each row minimum to 0.
    std::vector<TropScalar> e(static_cast<std::size_t>(d) * n);
    for (int i = 0; i < d; ++i)
    {
        bool have = false;
        Rational lo;
        for (int j : subset_of(supp.row_neighbors(i)))
        {
            const Rational& v = (*w)[var[static_cast<std::size_t>(i) * n + j]];
            if (!have || v < lo)
                lo = v;
            have = true;
        }
        for (int j : subset_of(supp.row_neighbors(i)))
            e[static_cast<std::size_t>(i) * n + j] = TropScalar(Rational((*w)[var[static_cast<std::size_t>(i) * n + j]] - lo));
    }
    TropMatrix witness(d, n, std::move(e));
    if (!(matching_multifield(witness) == lambda))
        throw Error("INTERNAL", "coherence witness does not reproduce the multifield");
    return witness;
}

bool hall_surplus_check(const BipartiteGraph& g)
{
    const int d = g.d();
    for (Mask rows = 1; rows <= full_mask(d) && rows != 0; ++rows)
        if (popcount(g.neighbors_of_rows(rows)) < g.n() - d + popcount(rows))
            return false;
    return true;
}

bool is_support_set(const BipartiteGraph& g)
{
    for (int i = 0; i < g.d(); ++i)
        if (g.row_degree(i) != g.n() - g.d() + 1)
            return false;
    return hall_surplus_check(g);
}

std::vector<BipartiteGraph> enumerate_support_sets(int d, int n, std::size_t budget)
{
    if (d < 1 || n < d)
        throw Error("PRECONDITION", "support sets need 1 <= d <= n");
    std::vector<Subset> rows = combinations(n, n - d + 1);
    long double count = 1;
    for (int i = 0; i < d; ++i)
        count *= static_cast<long double>(rows.size());
    if (count > static_cast<long double>(budget))
        throw Error("BUDGET_EXCEEDED", "too many candidate support sets");
    std::vector<BipartiteGraph> out;
    std::vector<std::size_t> pick(d, 0);
    while (true)
    {
        std::vector<Edge> e;
        for (int i = 0; i < d; ++i)
            for (int j : rows[pick[i]])
                e.emplace_back(i, j);
        BipartiteGraph g(d, n, std::move(e));
        if (hall_surplus_check(g))
            out.push_back(std::move(g));
        int i = d - 1;
        while (i >= 0 && pick[i] + 1 == rows.size())
            pick[i--] = 0;
        if (i < 0)
            break;
        ++pick[i];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int max_matching_size(const BipartiteGraph& g, Mask cols)
{
    return kuhn(g, full_mask(g.d()), cols);
}

Matroid transversal_matroid(const BipartiteGraph& g)
{
    std::vector<Mask> bases;
    for (const auto& b : combinations(g.n(), g.d()))
    {
        Mask m = mask_of(b);
        if (max_matching_size(g, m) == g.d())
            bases.push_back(m);
    }
    return Matroid::from_masks(g.n(), g.d(), std::move(bases));
}

int transversal_rank(const BipartiteGraph& g, Mask s)
{
    int best = g.d();
    for (Mask rows = 1; rows <= full_mask(g.d()) && rows != 0; ++rows)
        best = std::min(best, popcount(s & g.neighbors_of_rows(rows)) + g.d() - popcount(rows));
    return best;
}

bool dragon_condition(const BipartiteGraph& g)
{
    for (Mask rows = 1; rows <= full_mask(g.d()) && rows != 0; ++rows)
        if (popcount(g.neighbors_of_rows(rows)) < popcount(rows) + 1)
            return false;
    return true;
}

bool colwise_dragon_condition(const BipartiteGraph& g, Mask j)
{
    for (Mask sub = j; sub != 0; sub = (sub - 1) & j)
        if (popcount(g.neighbors_of_cols(sub)) < popcount(sub) + 1)
            return false;
    return true;
}

bool is_connected(const BipartiteGraph& g)
{
    UnionFind uf(g.d() + g.n());
    int comps = g.d() + g.n();
    for (auto [i, j] : g.edges())
        if (uf.unite(i, g.d() + j))
            --comps;
    return comps == 1;
}

bool is_tree(const BipartiteGraph& g)
{
    return is_connected(g) && static_cast<int>(g.size()) == g.d() + g.n() - 1;
}

bool every_edge_in_matching(const BipartiteGraph& g)
{
    for (auto [i, j] : g.edges())
    {
        Mask rows = full_mask(g.d()) & ~(Mask(1) << i);
        Mask cols = full_mask(g.n()) & ~(Mask(1) << j);
        if (kuhn(g, rows, cols) < g.d() - 1)
            return false;
    }
    return true;
}

BipartiteGraph spanning_tree_no_left_leaves(const BipartiteGraph& g)
{
    const int d = g.d();
    if (d >= g.n())
        throw Error("PRECONDITION", "spanning tree construction needs d < n");
    if (!is_connected(g))
        throw Error("PRECONDITION", "graph is not connected");
    if (!every_edge_in_matching(g))
        throw Error("PRECONDITION", "some edge lies in no matching");

    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<bool> in(m, false);

    auto forest_ok = [&](const std::vector<bool>& set) {
        UnionFind uf(d + g.n());
        for (int k = 0; k < m; ++k)
            if (set[k] && !uf.unite(edges[k].first, d + edges[k].second))
                return false;
        return true;
    };
    auto degree_ok = [&](const std::vector<bool>& set) {
        std::vector<int> deg(d, 0);
        for (int k = 0; k < m; ++k)
            if (set[k] && ++deg[edges[k].first] > 2)
                return false;
        return true;
    };
    auto swapped = [&](int out, int add) {
        std::vector<bool> s = in;
        if (out >= 0)
            s[out] = false;
        s[add] = true;
        return s;
    };

    // Matroid intersection by shortest augmenting paths in the exchange graph.
    while (true)
    {
        std::vector<bool> src(m, false), dst(m, false);
        for (int x = 0; x < m; ++x)
        {
            if (in[x])
                continue;
            auto s = swapped(-1, x);
            src[x] = forest_ok(s);
            dst[x] = degree_ok(s);
        }
        std::vector<int> prev(m, -2);
        std::deque<int> q;
        for (int x = 0; x < m; ++x)
        {
            if (src[x])
            {
                prev[x] = -1;
                q.push_back(x);
            }
        }
        int end = -1;
        while (!q.empty() && end < 0)
        {
            int v = q.front();
            q.pop_front();
            if (!in[v] && dst[v])
            {
                end = v;
                break;
            }
            for (int w = 0; w < m; ++w)
            {
                if (prev[w] != -2 || in[w] == in[v])
                    continue;
                // out-of-I v to in-I w: I − w + v independent in the degree matroid;
                // in-I v to out-of-I w: I − v + w independent in the graphic matroid.
                bool arc = in[v] ? forest_ok(swapped(v, w)) : degree_ok(swapped(w, v));
                if (arc)
                {
                    prev[w] = v;
                    q.push_back(w);
                }
            }
        }
        if (end < 0)
            break;
        for (int v = end; v >= 0; v = prev[v])
            in[v] = !in[v];
    }

    int chosen = static_cast<int>(std::count(in.begin(), in.end(), true));
    if (chosen < 2 * d)
        throw Error("PRECONDITION", "no spanning tree without leaves on the row side exists");

    UnionFind uf(d + g.n());
    std::vector<Edge> tree;
    for (int k = 0; k < m; ++k)
    {
        if (in[k])
        {
            uf.unite(edges[k].first, d + edges[k].second);
            tree.push_back(edges[k]);
        }
    }
    for (int k = 0; k < m; ++k)
        if (!in[k] && uf.unite(edges[k].first, d + edges[k].second))
            tree.push_back(edges[k]);
    return BipartiteGraph(d, g.n(), std::move(tree));
}

int support_face_dimension(const BipartiteGraph& g)
{
    const int nv = g.d() + g.n();
    UnionFind uf(nv);
    std::vector<bool> touched(nv, false);
    for (auto [i, j] : g.edges())
    {
        uf.unite(i, g.d() + j);
        touched[i] = true;
        touched[g.d() + j] = true;
    }
    int vertices = 0, comps = 0;
    for (int v = 0; v < nv; ++v)
    {
        if (!touched[v])
            continue;
        ++vertices;
        if (uf.find(v) == v)
            ++comps;
    }
    return static_cast<int>(g.size()) - vertices + comps;
}

}   // namespace stiefel
