#include "stiefel/geom.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "stiefel/error.hpp"

namespace stiefel {

Rational dot(const RVec& a, const RVec& x)
{
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (sgn(a[k]) != 0)
            s += a[k] * x[k];
    return s;
}

namespace {

/** Reduced row echelon form in place; returns the pivot columns. */
std::vector<int> row_reduce(RMat& rows, int ncols)
{
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c)
    {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (int k = 0; k < ncols; ++k)
            rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (i == r || sgn(rows[i][c]) == 0)
                continue;
            Rational f = rows[i][c];
            for (int k = 0; k < ncols; ++k)
                if (sgn(rows[r][k]) != 0)
                    rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}   // namespace

int matrix_rank(RMat rows)
{
    if (rows.empty())
        return 0;
    int ncols = static_cast<int>(rows[0].size());
    return static_cast<int>(row_reduce(rows, ncols).size());
}

RMat nullspace(RMat rows, int ncols)
{
    std::vector<int> pivots = row_reduce(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    RMat basis;
    for (int f = 0; f < ncols; ++f)
    {
        if (is_pivot[f])
            continue;
        RVec v(ncols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

void LinearConstraintSystem::check(const RVec& a) const
{
    if (static_cast<int>(a.size()) != dim_)
        throw Error("DIMENSION_MISMATCH", "constraint length differs from ambient dimension");
}

void LinearConstraintSystem::add_equality(RVec a, Rational b)
{
    check(a);
    eq_.push_back({std::move(a), std::move(b)});
}

void LinearConstraintSystem::add_weak(RVec a, Rational b)
{
    check(a);
    weak_.push_back({std::move(a), std::move(b)});
}

void LinearConstraintSystem::add_strict(RVec a, Rational b)
{
    check(a);
    strict_.push_back({std::move(a), std::move(b)});
}

void LinearConstraintSystem::add_weak_upper(RVec a, Rational b)
{
    for (auto& v : a)
        v = -v;
    add_weak(std::move(a), -b);
}

void LinearConstraintSystem::add_strict_upper(RVec a, Rational b)
{
    for (auto& v : a)
        v = -v;
    add_strict(std::move(a), -b);
}

bool LinearConstraintSystem::satisfied_by(const RVec& x) const
{
    if (static_cast<int>(x.size()) != dim_)
        return false;
    for (const auto& c : eq_)
        if (dot(c.a, x) != c.b)
            return false;
    for (const auto& c : weak_)
        if (dot(c.a, x) < c.b)
            return false;
    for (const auto& c : strict_)
        if (dot(c.a, x) <= c.b)
            return false;
    return true;
}

namespace {

/**
 * Dense simplex tableau for: maximize c·z, rows·z = rhs, z ≥ 0, rhs ≥ 0.
 */
class Tableau
{
    public:
        RMat a;
        RVec rhs;
        std::vector<int> basis;
        int ncols = 0;

        void pivot(std::size_t r, int c, RVec& obj)
        {
            Rational inv = 1 / a[r][c];
            std::vector<int> nz;
            for (int k = 0; k < ncols; ++k)
            {
                if (sgn(a[r][k]) != 0)
                {
                    a[r][k] *= inv;
                    nz.push_back(k);
                }
            }
            rhs[r] *= inv;
            for (std::size_t i = 0; i < a.size(); ++i)
            {
                if (i == r || sgn(a[i][c]) == 0)
                    continue;
                Rational f = a[i][c];
                for (int k : nz)
                    a[i][k] -= f * a[r][k];
                rhs[i] -= f * rhs[r];
            }
            if (sgn(obj[c]) != 0)
            {
                Rational f = obj[c];
                for (int k : nz)
                    obj[k] -= f * a[r][k];
            }
            basis[r] = c;
        }

        /** Reduced costs of c for the current basis. */
        RVec reduced_costs(const RVec& c) const
        {
            RVec obj = c;
            for (std::size_t i = 0; i < a.size(); ++i)
            {
                const Rational& cb = c[basis[i]];
                if (sgn(cb) == 0)
                    continue;
                for (int k = 0; k < ncols; ++k)
                    if (sgn(a[i][k]) != 0)
                        obj[k] -= cb * a[i][k];
            }
            return obj;
        }

        /** Runs Bland's-rule simplex; returns false if unbounded. */
        bool optimize(const RVec& c, const std::vector<bool>& allowed)
        {
            RVec obj = reduced_costs(c);
            while (true)
            {
                int enter = -1;
                for (int k = 0; k < ncols; ++k)
                {
                    if (allowed[k] && sgn(obj[k]) > 0)
                    {
                        enter = k;
                        break;
                    }
                }
                if (enter < 0)
                    return true;
                std::size_t leave = a.size();
                Rational best;
                for (std::size_t i = 0; i < a.size(); ++i)
                {
                    if (sgn(a[i][enter]) <= 0)
                        continue;
                    Rational ratio = rhs[i] / a[i][enter];
                    if (leave == a.size() || ratio < best || (ratio == best && basis[i] < basis[leave]))
                    {
                        leave = i;
                        best = ratio;
                    }
                }
                if (leave == a.size())
                    return false;
                pivot(leave, enter, obj);
            }
        }

        Rational value(const RVec& c) const
        {
            Rational v = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                v += c[basis[i]] * rhs[i];
            return v;
        }
};

}   // namespace

LpResult lp_maximize(const LinearConstraintSystem& sys, const RVec& c)
{
    if (!sys.strict().empty())
        throw Error("PRECONDITION", "lp_maximize does not accept strict constraints");
    const int n = sys.dim();
    if (static_cast<int>(c.size()) != n)
        throw Error("DIMENSION_MISMATCH", "objective length differs from ambient dimension");

    const auto& eqs = sys.equalities();
    const auto& ges = sys.weak();
    const std::size_t m = eqs.size() + ges.size();
    const int nsur = static_cast<int>(ges.size());

    // Columns: u (n), v (n), surplus (nsur), artificials (assigned below).
    const int base_cols = 2 * n + nsur;
    Tableau t;
    t.a.assign(m, RVec());
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, -1);
    std::vector<int> needs_art;

    for (std::size_t r = 0; r < m; ++r)
    {
        const Constraint& con = r < eqs.size() ? eqs[r] : ges[r - eqs.size()];
        RVec row(base_cols, Rational(0));
        for (int k = 0; k < n; ++k)
        {
            row[k] = con.a[k];
            row[n + k] = -con.a[k];
        }
        Rational b = con.b;
        int sur = -1;
        if (r >= eqs.size())
        {
            sur = 2 * n + static_cast<int>(r - eqs.size());
            row[sur] = -1;
        }
        if (sgn(b) < 0 || (sur >= 0 && sgn(b) == 0))
        {
            for (auto& v : row)
                v = -v;
            b = -b;
        }
        if (sur >= 0 && sgn(row[sur]) > 0)
            t.basis[r] = sur;
        else
            needs_art.push_back(static_cast<int>(r));
        t.a[r] = std::move(row);
        t.rhs[r] = b;
    }

    const int nart = static_cast<int>(needs_art.size());
    t.ncols = base_cols + nart;
    for (auto& row : t.a)
        row.resize(t.ncols, Rational(0));
    for (int k = 0; k < nart; ++k)
    {
        t.a[needs_art[k]][base_cols + k] = 1;
        t.basis[needs_art[k]] = base_cols + k;
    }

    std::vector<bool> allowed(t.ncols, true);
    if (nart > 0)
    {
        RVec c1(t.ncols, Rational(0));
        for (int k = 0; k < nart; ++k)
            c1[base_cols + k] = -1;
        t.optimize(c1, allowed);
        if (sgn(t.value(c1)) < 0)
            return {LpStatus::Infeasible, Rational(0), {}};
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        for (std::size_t r = 0; r < t.a.size();)
        {
            if (t.basis[r] < base_cols)
            {
                ++r;
                continue;
            }
            int col = -1;
            for (int k = 0; k < base_cols; ++k)
            {
                if (sgn(t.a[r][k]) != 0)
                {
                    col = k;
                    break;
                }
            }
            if (col < 0)
            {
                t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(r));
                t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(r));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
                continue;
            }
            RVec dummy(t.ncols, Rational(0));
            t.pivot(r, col, dummy);
            ++r;
        }
        for (int k = 0; k < nart; ++k)
            allowed[base_cols + k] = false;
    }

    RVec c2(t.ncols, Rational(0));
    for (int k = 0; k < n; ++k)
    {
        c2[k] = c[k];
        c2[n + k] = -c[k];
    }
    LpResult res;
    if (!t.optimize(c2, allowed))
    {
        res.status = LpStatus::Unbounded;
        return res;
    }
    RVec z(t.ncols, Rational(0));
    for (std::size_t i = 0; i < t.a.size(); ++i)
        z[t.basis[i]] = t.rhs[i];
    res.point.assign(n, Rational(0));
    for (int k = 0; k < n; ++k)
        res.point[k] = z[k] - z[n + k];
    res.value = dot(c, res.point);
    res.status = LpStatus::Optimal;
    return res;
}

std::optional<RVec> strict_feasible(const LinearConstraintSystem& sys)
{
    const int n = sys.dim();
    if (sys.strict().empty())
    {
        LinearConstraintSystem s2(n);
        for (const auto& c : sys.equalities())
            s2.add_equality(c.a, c.b);
        for (const auto& c : sys.weak())
            s2.add_weak(c.a, c.b);
        LpResult r = lp_maximize(s2, RVec(n, Rational(0)));
        if (r.status != LpStatus::Optimal)
            return std::nullopt;
        if (!sys.satisfied_by(r.point))
            throw Error("INTERNAL", "LP witness fails verification");
        return r.point;
    }

    // Variables (x, ε); strict rows become ⟨a,x⟩ − ε ≥ b, with ε ≤ 1.
    LinearConstraintSystem s2(n + 1);
    auto ext = [&](const RVec& a, Rational last) {
        RVec v = a;
        v.push_back(std::move(last));
        return v;
    };
    for (const auto& c : sys.equalities())
        s2.add_equality(ext(c.a, 0), c.b);
    for (const auto& c : sys.weak())
        s2.add_weak(ext(c.a, 0), c.b);
    for (const auto& c : sys.strict())
        s2.add_weak(ext(c.a, -1), c.b);
    RVec eps(n + 1, Rational(0));
    eps[n] = 1;
    s2.add_weak_upper(eps, 1);
    LpResult r = lp_maximize(s2, eps);
    if (r.status != LpStatus::Optimal || sgn(r.value) <= 0)
        return std::nullopt;
    RVec x(r.point.begin(), r.point.begin() + n);
    if (!sys.satisfied_by(x))
        throw Error("INTERNAL", "strict witness fails verification");
    return x;
}

Polyhedron::Polyhedron(int dim, std::vector<Constraint> equalities, std::vector<Constraint> inequalities)
    : dim_(dim), eq_(std::move(equalities)), ineq_(std::move(inequalities))
{
    for (const auto& c : eq_)
        if (static_cast<int>(c.a.size()) != dim_)
            throw Error("DIMENSION_MISMATCH", "equality length differs from ambient dimension");
    for (const auto& c : ineq_)
        if (static_cast<int>(c.a.size()) != dim_)
            throw Error("DIMENSION_MISMATCH", "inequality length differs from ambient dimension");
}

void Polyhedron::add_equality(RVec a, Rational b)
{
    if (static_cast<int>(a.size()) != dim_)
        throw Error("DIMENSION_MISMATCH", "equality length differs from ambient dimension");
    eq_.push_back({std::move(a), std::move(b)});
}

void Polyhedron::add_inequality(RVec a, Rational b)
{
    if (static_cast<int>(a.size()) != dim_)
        throw Error("DIMENSION_MISMATCH", "inequality length differs from ambient dimension");
    ineq_.push_back({std::move(a), std::move(b)});
}

void Polyhedron::add_upper(RVec a, Rational b)
{
    for (auto& v : a)
        v = -v;
    add_inequality(std::move(a), -b);
}

bool Polyhedron::contains(const RVec& x) const
{
    for (const auto& c : eq_)
        if (dot(c.a, x) != c.b)
            return false;
    for (const auto& c : ineq_)
        if (dot(c.a, x) < c.b)
            return false;
    return true;
}

Polyhedron Polyhedron::with_tight(const std::vector<int>& indices) const
{
    Polyhedron p = *this;
    for (int k : indices)
        p.eq_.push_back(ineq_[k]);
    return p;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const
{
    if (other.dim_ != dim_)
        throw Error("DIMENSION_MISMATCH", "intersecting polyhedra of different ambient dimension");
    Polyhedron p = *this;
    p.eq_.insert(p.eq_.end(), other.eq_.begin(), other.eq_.end());
    p.ineq_.insert(p.ineq_.end(), other.ineq_.begin(), other.ineq_.end());
    return p;
}

LinearConstraintSystem Polyhedron::as_system() const
{
    LinearConstraintSystem s(dim_);
    for (const auto& c : eq_)
        s.add_equality(c.a, c.b);
    for (const auto& c : ineq_)
        s.add_weak(c.a, c.b);
    return s;
}

PolyhedronAnalysis analyze(const Polyhedron& p)
{
    PolyhedronAnalysis info;
    const int n = p.dim();
    const auto& ineq = p.inequalities();
    const std::size_t m = ineq.size();

    LinearConstraintSystem base = p.as_system();
    LpResult feas = lp_maximize(base, RVec(n, Rational(0)));
    if (feas.status != LpStatus::Optimal)
        return info;
    info.empty = false;

    // Non-implicit inequalities are certified by points where they are slack;
    // the average of those points is slack on all of them at once.
    std::vector<bool> certified(m, false);
    std::vector<RVec> points{feas.point};
    auto certify_with = [&](const RVec& x) {
        bool any = false;
        for (std::size_t k = 0; k < m; ++k)
        {
            if (!certified[k] && dot(ineq[k].a, x) > ineq[k].b)
            {
                certified[k] = true;
                any = true;
            }
        }
        return any;
    };
    certify_with(feas.point);

    while (true)
    {
        std::vector<std::size_t> open;
        for (std::size_t k = 0; k < m; ++k)
            if (!certified[k])
                open.push_back(k);
        if (open.empty())
            break;
        // maximize Σ t_k subject to ⟨a_k,x⟩ − t_k ≥ b_k, t_k ≤ 1 over open k.
        const int nv = n + static_cast<int>(open.size());
        LinearConstraintSystem s(nv);
        auto ext = [&](const RVec& a) {
            RVec v = a;
            v.resize(nv, Rational(0));
            return v;
        };
        for (const auto& c : p.equalities())
            s.add_equality(ext(c.a), c.b);
        for (const auto& c : ineq)
            s.add_weak(ext(c.a), c.b);
        RVec obj(nv, Rational(0));
        for (std::size_t t = 0; t < open.size(); ++t)
        {
            RVec row = ext(ineq[open[t]].a);
            row[n + t] = -1;
            s.add_weak(std::move(row), ineq[open[t]].b);
            RVec up(nv, Rational(0));
            up[n + t] = 1;
            s.add_weak_upper(std::move(up), 1);
            obj[n + t] = 1;
        }
        LpResult r = lp_maximize(s, obj);
        if (r.status != LpStatus::Optimal || sgn(r.value) <= 0)
            break;
        RVec x(r.point.begin(), r.point.begin() + n);
        if (!certify_with(x))
            break;
        points.push_back(std::move(x));
    }

    info.implicit.assign(m, false);
    for (std::size_t k = 0; k < m; ++k)
        info.implicit[k] = !certified[k];

    RVec avg(n, Rational(0));
    for (const auto& x : points)
        for (int k = 0; k < n; ++k)
            avg[k] += x[k];
    Rational cnt(static_cast<long>(points.size()));
    for (auto& v : avg)
        v /= cnt;
    info.interior_point = std::move(avg);

    RMat rows;
    for (const auto& c : p.equalities())
        rows.push_back(c.a);
    for (std::size_t k = 0; k < m; ++k)
        if (info.implicit[k])
            rows.push_back(ineq[k].a);
    info.dimension = n - matrix_rank(std::move(rows));
    return info;
}

int affine_dimension(const Polyhedron& p)
{
    return analyze(p).dimension;
}

std::optional<RVec> relative_interior_point(const Polyhedron& p)
{
    PolyhedronAnalysis info = analyze(p);
    if (info.empty)
        return std::nullopt;
    return info.interior_point;
}

bool in_relative_interior(const Polyhedron& p, const PolyhedronAnalysis& info, const RVec& x)
{
    if (info.empty || !p.contains(x))
        return false;
    for (std::size_t k = 0; k < p.inequalities().size(); ++k)
    {
        const auto& c = p.inequalities()[k];
        if (!info.implicit[k] && dot(c.a, x) == c.b)
            return false;
    }
    return true;
}

int affine_image_dimension(const Polyhedron& p, const RMat& m)
{
    PolyhedronAnalysis info = analyze(p);
    if (info.empty)
        return -1;
    RMat rows;
    for (const auto& c : p.equalities())
        rows.push_back(c.a);
    for (std::size_t k = 0; k < p.inequalities().size(); ++k)
        if (info.implicit[k])
            rows.push_back(p.inequalities()[k].a);
    RMat dirs = rows.empty() ? RMat() : nullspace(rows, p.dim());
    if (rows.empty())
    {
        for (int k = 0; k < p.dim(); ++k)
        {
            RVec e(p.dim(), Rational(0));
            e[k] = 1;
            dirs.push_back(std::move(e));
        }
    }
    // Image directions are the columns M v for v in the direction space.
    RMat images;
    for (const auto& v : dirs)
    {
        RVec w(m.size(), Rational(0));
        for (std::size_t r = 0; r < m.size(); ++r)
            w[r] = dot(m[r], v);
        images.push_back(std::move(w));
    }
    return matrix_rank(std::move(images));
}

std::vector<Face> enumerate_faces(const Polyhedron& p, std::size_t budget)
{
    std::vector<Face> faces;
    PolyhedronAnalysis top = analyze(p);
    if (top.empty)
        return faces;
    const std::size_t m = p.inequalities().size();

    auto tight_of = [&](const std::vector<bool>& implicit) {
        std::vector<int> t;
        for (std::size_t k = 0; k < m; ++k)
            if (implicit[k])
                t.push_back(static_cast<int>(k));
        return t;
    };

    std::map<std::vector<int>, std::size_t> seen;
    std::deque<std::size_t> queue;
    auto add = [&](std::vector<int> tight, const PolyhedronAnalysis& info) {
        if (seen.count(tight))
            return;
        if (faces.size() >= budget)
            throw Error("BUDGET_EXCEEDED", "face enumeration exceeded its budget");
        Face f;
        f.tight = tight;
        f.dimension = info.dimension;
        f.interior_point = info.interior_point;
        f.polyhedron = p.with_tight(tight);
        seen.emplace(std::move(tight), faces.size());
        queue.push_back(faces.size());
        faces.push_back(std::move(f));
    };
    add(tight_of(top.implicit), top);

    while (!queue.empty())
    {
        std::size_t idx = queue.front();
        queue.pop_front();
        std::vector<int> tight = faces[idx].tight;
        std::vector<bool> in_tight(m, false);
        for (int k : tight)
            in_tight[k] = true;
        for (std::size_t k = 0; k < m; ++k)
        {
            if (in_tight[k])
                continue;
            std::vector<int> t2 = tight;
            t2.push_back(static_cast<int>(k));
            std::sort(t2.begin(), t2.end());
            PolyhedronAnalysis info = analyze(p.with_tight(t2));
            if (info.empty)
                continue;
            add(tight_of(info.implicit), info);
        }
    }

    std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dimension != b.dimension)
            return a.dimension > b.dimension;
        return a.tight < b.tight;
    });
    return faces;
}

bool face_contained_in(const Face& f, const Face& g)
{
    return std::includes(f.tight.begin(), f.tight.end(), g.tight.begin(), g.tight.end());
}

}   // namespace stiefel
