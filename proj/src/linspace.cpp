#include "stiefel/linspace.hpp"

#include <algorithm>

#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"
#include "stiefel/subdivision.hpp"

namespace stiefel {

namespace {

void require_length(const TropVector& y, int n)
{
    if (static_cast<int>(y.size()) != n)
        throw Error("DIMENSION_MISMATCH", "vector length differs from the ground set");
}

void require_uniform(const PluckerVector& p)
{
    for (const auto& v : p.values())
        if (v.is_infinite())
            throw Error("PRECONDITION", "boundedness needs a uniform underlying matroid");
}

/** (x ⊙ A)_j for finite x. */
RVec product(const TropMatrix& a, const RVec& x)
{
    RVec out(a.n());
    for (int j = 0; j < a.n(); ++j)
    {
        TropScalar best;
        for (int i = 0; i < a.d(); ++i)
            best = oplus(best, a.at(i, j) + TropScalar(x[i]));
        out[j] = best.value();
    }
    return out;
}

/** Minimum over the (d+1)-subsets with an optional infinitesimal shift of y_j. */
bool circuits_tie(const PluckerVector& p, const TropVector& y, int shifted)
{
    const int d = p.d();
    const int n = p.n();
    if (d + 1 > n)
        return true;
    for (const auto& s : combinations(n, d + 1))
    {
        Mask sm = mask_of(s);
        TropScalar best;
        int best_eps = 0;
        int count = 0;
        for (int k : s)
        {
            TropScalar v = p.at_mask(sm & ~(Mask(1) << k)) + y[k];
            if (v.is_infinite())
                continue;
            int eps = k == shifted ? -1 : 0;
            if (v < best || (v == best && eps < best_eps))
            {
                best = v;
                best_eps = eps;
                count = 1;
            }
            else if (v == best && eps == best_eps)
            {
                ++count;
            }
        }
        if (best.is_finite() && count < 2)
            return false;
    }
    return true;
}

RVec unit(int dim, int k)
{
    RVec e(dim, Rational(0));
    e[k] = 1;
    return e;
}

/** Embeds a constraint on (x, y) ∈ ℝ^d × ℝ^n into a larger space at the given x offset. */
RVec embed(const RVec& a, int d, int n, int x_offset, int total)
{
    RVec out(total, Rational(0));
    for (int i = 0; i < d; ++i)
        out[x_offset + i] = a[i];
    for (int j = 0; j < n; ++j)
        out[total - n + j] = a[d + j];
    return out;
}

}   // namespace

bool contains(const PluckerVector& p, const TropVector& y)
{
    require_length(y, p.n());
    return circuits_tie(p, y, -1);
}

bool contains_perturbed(const PluckerVector& p, const TropVector& y, int j)
{
    require_length(y, p.n());
    if (j < 0 || j >= p.n())
        throw Error("DIMENSION_MISMATCH", "perturbed coordinate out of range");
    return circuits_tie(p, y, j);
}

bool contains_via_matroid(const PluckerVector& p, const TropVector& y)
{
    return select_matroid(p, y).matroid.is_loopless();
}

bool verify_certificate(const TropMatrix& a, const TropVector& y, const DecompositionCertificate& cert)
{
    const int d = a.d();
    const int n = a.n();
    if (static_cast<int>(cert.x.size()) != d || static_cast<int>(cert.slack.size()) != n
        || static_cast<int>(y.size()) != n || !y.all_finite())
        return false;
    if (cert.covector.d() != d || cert.covector.n() != n || !in_B(cert.covector))
        return false;
    Mask jm = mask_of(cert.j);
    if (!colwise_dragon_condition(cert.covector, jm))
        return false;
    if (!cert.covector.is_subgraph_of(covector_of_point(a, cert.x)))
        return false;
    RVec img = product(a, cert.x);
    for (int j = 0; j < n; ++j)
    {
        if (img[j] + cert.slack[j] != y[j].value())
            return false;
        if (has(jm, j) ? sgn(cert.slack[j]) <= 0 : sgn(cert.slack[j]) != 0)
            return false;
    }
    return true;
}

Decomposer::Decomposer(ArrangementComplex tc) : tc_(std::move(tc))
{
    const auto& cells = tc_.cells();
    for (std::size_t c = 0; c < cells.size(); ++c)
    {
        const Covector& f = cells[c].covector;
        if (!in_B(f))
            continue;
        Mask multi = 0;
        for (int j = 0; j < f.n(); ++j)
            if (f.col_degree(j) >= 2)
                multi |= Mask(1) << j;
        std::vector<Subset> js;
        for (Mask sub = multi;; sub = (sub - 1) & multi)
        {
            if (colwise_dragon_condition(f, sub))
                js.push_back(subset_of(sub));
            if (sub == 0)
                break;
        }
        std::sort(js.begin(), js.end());
        cells_.push_back(c);
        candidates_.push_back(std::move(js));
    }
}

Decomposer::Decomposer(const TropMatrix& a, std::size_t budget)
    : Decomposer(enumerate_covectors(a, budget))
{
}

std::optional<DecompositionCertificate> Decomposer::try_pair(const Covector& f, const Subset& jset,
                                                             const TropVector& y) const
{
    const TropMatrix& a = tc_.matrix();
    const int d = a.d();
    const int n = a.n();
    require_length(y, n);
    std::vector<Rational> yv = y.finite_values();
    Mask jm = mask_of(jset);

    // Columns outside J pin x_i = y_j − a_ij for every row i of the column.
    std::vector<std::optional<Rational>> pinned(d);
    for (int j = 0; j < n; ++j)
    {
        if (has(jm, j))
            continue;
        for (int i : subset_of(f.col_neighbors(j)))
        {
            Rational v = yv[j] - a.at(i, j).value();
            if (pinned[i] && *pinned[i] != v)
                return std::nullopt;
            pinned[i] = v;
        }
    }

    RVec x(d);
    bool all_pinned = std::all_of(pinned.begin(), pinned.end(), [](const auto& v) { return v.has_value(); });
    if (all_pinned)
    {
        for (int i = 0; i < d; ++i)
            x[i] = *pinned[i];
        for (const auto& [i, j] : f.edges())
        {
            for (int k = 0; k < d; ++k)
                if (a.at(k, j).is_finite() && x[k] + a.at(k, j).value() < x[i] + a.at(i, j).value())
                    return std::nullopt;
        }
        for (int j : jset)
        {
            int i = std::countr_zero(f.col_neighbors(j));
            if (x[i] + a.at(i, j).value() >= yv[j])
                return std::nullopt;
        }
    }
    else
    {
        Polyhedron cell = cell_polyhedron(a, f, false);
        LinearConstraintSystem sys = cell.as_system();
        for (int i = 0; i < d; ++i)
            if (pinned[i])
                sys.add_equality(unit(d, i), *pinned[i]);
        for (int j : jset)
        {
            int i = std::countr_zero(f.col_neighbors(j));
            sys.add_strict_upper(unit(d, i), yv[j] - a.at(i, j).value());
        }
        auto sol = strict_feasible(sys);
        if (!sol)
            return std::nullopt;
        x = *sol;
    }

    DecompositionCertificate cert;
    cert.covector = f;
    cert.x = x;
    cert.j = jset;
    RVec img = product(a, x);
    cert.slack.resize(n);
    for (int j = 0; j < n; ++j)
        cert.slack[j] = yv[j] - img[j];
    if (!verify_certificate(a, y, cert))
        throw Error("INTERNAL", "decomposition certificate failed verification");
    return cert;
}

std::optional<DecompositionCertificate> Decomposer::decompose(const TropVector& y) const
{
    require_length(y, tc_.matrix().n());
    if (!y.all_finite())
        throw Error("PRECONDITION", "decomposition works in the finite torus");
    for (std::size_t k = 0; k < cells_.size(); ++k)
    {
        const Covector& f = tc_.cells()[cells_[k]].covector;
        for (const auto& js : candidates_[k])
            if (auto cert = try_pair(f, js, y))
                return cert;
    }
    return std::nullopt;
}

std::optional<DecompositionCertificate> decompose(const TropMatrix& a, const TropVector& y, std::size_t budget)
{
    return Decomposer(a, budget).decompose(y);
}

bool bounded_membership(const PluckerVector& p, const TropVector& y)
{
    require_uniform(p);
    return contains(p, y) && select_matroid(p, y).matroid.is_coloop_free();
}

bool bounded_membership_perturbed(const PluckerVector& p, const TropVector& y)
{
    require_uniform(p);
    if (!y.all_finite())
        throw Error("PRECONDITION", "boundedness is tested in the finite torus");
    if (!contains(p, y))
        return false;
    for (int j = 0; j < p.n(); ++j)
        if (contains_perturbed(p, y, j))
            return false;
    return true;
}

Polyhedron image_polyhedron(const TropMatrix& a, const Covector& tau)
{
    const int d = a.d();
    const int n = a.n();
    if (!in_B(tau))
        throw Error("PRECONDITION", "image polyhedra are defined for B(A) cells");
    if (!tau.is_subgraph_of(a.support()))
        throw Error("PRECONDITION", "covector leaves the support of the matrix");
    // On the cell, x_i = y_{c(i)} − a_{i c(i)} for any column c(i) of row i in τ.
    std::vector<int> col(d);
    for (int i = 0; i < d; ++i)
        col[i] = std::countr_zero(tau.row_neighbors(i));
    auto x_form = [&](int i, RVec& coef, Rational& cst, int sign) {
        coef[col[i]] += sign;
        cst -= sign * a.at(i, col[i]).value();
    };

    Polyhedron p(n);
    bool infeasible = false;
    for (const auto& [i, j] : tau.edges())
    {
        // y_j − x_i − a_ij = 0
        if (j != col[i])
        {
            RVec coef(n, Rational(0));
            Rational cst = -a.at(i, j).value();
            coef[j] += 1;
            x_form(i, coef, cst, -1);
            p.add_equality(std::move(coef), -cst);
        }
        // x_k + a_kj − x_i − a_ij ≥ 0 for k ∉ τ_j
        for (int k = 0; k < d; ++k)
        {
            if (tau.has_edge(k, j) || a.at(k, j).is_infinite())
                continue;
            RVec coef(n, Rational(0));
            Rational cst = a.at(k, j).value() - a.at(i, j).value();
            x_form(k, coef, cst, 1);
            x_form(i, coef, cst, -1);
            if (std::all_of(coef.begin(), coef.end(), [](const Rational& v) { return sgn(v) == 0; }))
            {
                infeasible = infeasible || sgn(cst) < 0;
                continue;
            }
            p.add_inequality(std::move(coef), -cst);
        }
    }
    if (infeasible)
        p.add_inequality(RVec(n, Rational(0)), 1);
    return p;
}

bool support_contains_support_set(const TropMatrix& a)
{
    const int d = a.d();
    const int n = a.n();
    if (d > n)
        return false;
    BipartiteGraph supp = a.support();
    const int k = n - d + 1;
    std::vector<Subset> options(d);
    std::vector<std::vector<Subset>> per_row(d);
    for (int i = 0; i < d; ++i)
    {
        Subset nb = subset_of(supp.row_neighbors(i));
        if (static_cast<int>(nb.size()) < k)
            return false;
        for (const auto& c : combinations(static_cast<int>(nb.size()), k))
        {
            Subset s;
            for (int t : c)
                s.push_back(nb[t]);
            per_row[i].push_back(std::move(s));
        }
    }
    std::vector<Edge> edges;
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == d)
            return is_support_set(BipartiteGraph(d, n, edges));
        for (const auto& s : per_row[i])
        {
            std::size_t mark = edges.size();
            for (int j : s)
                edges.emplace_back(i, j);
            if (self(self, i + 1))
                return true;
            edges.resize(mark);
        }
        return false;
    };
    return dfs(dfs, 0);
}

std::vector<BoundedCell> bounded_complex(const ArrangementComplex& tc)
{
    const TropMatrix& a = tc.matrix();
    if (!support_contains_support_set(a))
        throw Error("PRECONDITION", "the bounded complex needs a support set inside the support");
    std::vector<BoundedCell> out;
    for (const auto& c : tc.cells())
    {
        if (!in_K(c.covector))
            continue;
        BoundedCell b;
        b.covector = c.covector;
        b.dimension = c.dimension;
        b.image = image_polyhedron(a, c.covector);
        b.image_point = TropVector(product(a, c.interior_point));
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<BoundedCell> bounded_complex(const TropMatrix& a, std::size_t budget)
{
    if (!support_contains_support_set(a))
        throw Error("PRECONDITION", "the bounded complex needs a support set inside the support");
    return bounded_complex(enumerate_covectors(a, budget));
}

bool caterpillar_check(const TropMatrix& a)
{
    if (a.d() != 2)
        throw Error("PRECONDITION", "the caterpillar check is for two-row matrices");
    stiefel_map(a);
    ArrangementComplex tc = enumerate_covectors(a);
    auto cells = bounded_complex(tc);
    std::vector<std::size_t> vertices, edges;
    for (const auto& c : cells)
    {
        std::size_t idx = *tc.find(c.covector);
        (c.dimension == 0 ? vertices : edges).push_back(idx);
    }
    if (vertices.empty())
        throw Error("PRECONDITION", "the bounded part is empty");
    std::vector<std::vector<int>> adj(vertices.size());
    for (std::size_t e : edges)
    {
        std::vector<int> ends;
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (tc.face_of(vertices[v], e))
                ends.push_back(static_cast<int>(v));
        if (ends.size() != 2)
            return false;
        adj[ends[0]].push_back(ends[1]);
        adj[ends[1]].push_back(ends[0]);
    }
    return is_path_graph(adj);
}

Polyhedron lifted_term(const TropMatrix& a, const Covector& f, const Subset& jset)
{
    return lifted_intersection(a, {{f, jset}});
}

Polyhedron lifted_intersection(const TropMatrix& a, const std::vector<std::pair<Covector, Subset>>& terms)
{
    const int d = a.d();
    const int n = a.n();
    const int k = static_cast<int>(terms.size());
    const int total = k * d + n;
    Polyhedron out(total);
    for (int t = 0; t < k; ++t)
    {
        const auto& [f, jset] = terms[t];
        if (!in_B(f))
            throw Error("PRECONDITION", "decomposition terms need B(A) covectors");
        Mask jm = mask_of(jset);
        const int off = t * d;
        Polyhedron cell = cell_polyhedron(a, f, false);
        auto lift = [&](const RVec& v) {
            RVec w = v;
            w.resize(d + n, Rational(0));
            return embed(w, d, n, off, total);
        };
        for (const auto& c : cell.equalities())
            out.add_equality(lift(c.a), c.b);
        for (const auto& c : cell.inequalities())
            out.add_inequality(lift(c.a), c.b);
        for (const auto& [i, j] : f.edges())
        {
            RVec v(d + n, Rational(0));
            v[d + j] = 1;
            v[i] = -1;
            if (has(jm, j))
                out.add_inequality(embed(v, d, n, off, total), a.at(i, j).value());
            else
                out.add_equality(embed(v, d, n, off, total), a.at(i, j).value());
        }
    }
    return out;
}

int projected_dimension(const Polyhedron& lifted, int n)
{
    const int total = lifted.dim();
    RMat m;
    for (int j = 0; j < n; ++j)
        m.push_back(unit(total, total - n + j));
    return affine_image_dimension(lifted, m);
}

bool in_projected_relative_interior(const Polyhedron& lifted, const RVec& y)
{
    const int total = lifted.dim();
    const int n = static_cast<int>(y.size());
    Polyhedron fiber = lifted;
    for (int j = 0; j < n; ++j)
        fiber.add_equality(unit(total, total - n + j), y[j]);
    auto z = relative_interior_point(fiber);
    if (!z)
        return false;
    return in_relative_interior(lifted, analyze(lifted), *z);
}

}   // namespace stiefel
