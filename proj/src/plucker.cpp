#include "stiefel/plucker.hpp"

#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"
#include "stiefel/linspace.hpp"

namespace stiefel {

namespace {

std::size_t rank_of_mask(Mask m, int n)
{
    return combination_rank(subset_of(m), n);
}

}   // namespace

PluckerVector::PluckerVector(int d, int n, std::vector<TropScalar> values)
    : d_(d), n_(n), values_(std::move(values))
{
    if (n < 0 || n > kMaxGround || d < 0 || d > n)
        throw Error("DIMENSION_MISMATCH", "Plücker vector needs 0 <= d <= n");
    if (static_cast<long long>(values_.size()) != binomial(n, d))
        throw Error("DIMENSION_MISMATCH", "one value per d-subset expected");
    bool any = false;
    for (const auto& v : values_)
        any = any || v.is_finite();
    if (!any)
        throw Error("INFINITE_RESULT", "Plücker vector is identically infinite");
}

PluckerVector PluckerVector::from_map(int d, int n, const std::map<Subset, TropScalar>& values)
{
    std::vector<TropScalar> v(static_cast<std::size_t>(binomial(n, d)));
    for (const auto& [j, val] : values)
    {
        if (static_cast<int>(j.size()) != d || (!j.empty() && (j.front() < 0 || j.back() >= n)))
            throw Error("DIMENSION_MISMATCH", "Plücker coordinate {" + format_subset(j) + "} out of range");
        v[combination_rank(j, n)] = val;
    }
    return PluckerVector(d, n, std::move(v));
}

const TropScalar& PluckerVector::at(const Subset& j) const
{
    return values_[combination_rank(j, n_)];
}

const TropScalar& PluckerVector::at_mask(Mask j) const
{
    return values_[rank_of_mask(j, n_)];
}

PluckerVector PluckerVector::canonical() const
{
    for (const auto& v : values_)
        if (v.is_finite())
            return shifted(-v.value());
    return *this;
}

PluckerVector PluckerVector::shifted(const Rational& c) const
{
    std::vector<TropScalar> v;
    v.reserve(values_.size());
    for (const auto& x : values_)
        v.push_back(x + TropScalar(c));
    return PluckerVector(d_, n_, std::move(v));
}

bool PluckerVector::projectively_equal(const PluckerVector& other) const
{
    return d_ == other.d_ && n_ == other.n_ && canonical() == other.canonical();
}

std::string PluckerVector::to_string() const
{
    std::string out = "{";
    auto subs = subsets();
    for (std::size_t k = 0; k < subs.size(); ++k)
    {
        if (k)
            out += ", ";
        out += "[" + format_subset(subs[k]) + "]:" + values_[k].to_string();
    }
    return out + "}";
}

PluckerVector stiefel_map(const TropMatrix& a)
{
    std::vector<TropScalar> v;
    for (const auto& j : combinations(a.n(), a.d()))
        v.push_back(min_matchings(a, j).value);
    bool any = false;
    for (const auto& x : v)
        any = any || x.is_finite();
    if (!any)
        throw Error("NO_MATCHING_IN_SUPPORT", "the support of the matrix contains no matching");
    return PluckerVector(a.d(), a.n(), std::move(v));
}

bool check_plucker(const PluckerVector& p)
{
    const int d = p.d();
    const int n = p.n();
    if (d == 0 || d == n)
        return true;
    auto ss = combinations(n, d - 1);
    auto ts = combinations(n, d + 1);
    for (const auto& s : ss)
    {
        Mask sm = mask_of(s);
        for (const auto& t : ts)
        {
            Mask tm = mask_of(t);
            TropScalar best;
            int count = 0;
            for (int i : subset_of(tm & ~sm))
            {
                Mask bit = Mask(1) << i;
                TropScalar v = p.at_mask(sm | bit) + p.at_mask(tm & ~bit);
                if (v < best)
                {
                    best = v;
                    count = 1;
                }
                else if (v == best)
                {
                    ++count;
                }
            }
            if (best.is_finite() && count < 2)
                return false;
        }
    }
    return true;
}

PluckerVector dual(const PluckerVector& p)
{
    std::vector<TropScalar> v;
    for (const auto& s : combinations(p.n(), p.n() - p.d()))
        v.push_back(p.at(complement(s, p.n())));
    return PluckerVector(p.n() - p.d(), p.n(), std::move(v));
}

PluckerVector point_vector(const std::vector<TropScalar>& v)
{
    return PluckerVector(1, static_cast<int>(v.size()), v);
}

PluckerVector rank_zero(int n)
{
    return PluckerVector(0, n, {TropScalar(0)});
}

PluckerVector stable_intersection(const PluckerVector& p, const PluckerVector& q)
{
    const int n = p.n();
    if (q.n() != n)
        throw Error("DIMENSION_MISMATCH", "ground sets differ");
    const int d = p.d(), e = q.d();
    if (d + e < n)
        throw Error("PRECONDITION", "stable intersection needs d + e >= n");
    const int r = d + e - n;
    // R ∩ S = T with |R| = d, |S| = e forces R ∪ S = [n], so S = T ∪ ([n] ∖ R).
    std::vector<TropScalar> v;
    for (const auto& t : combinations(n, r))
    {
        Mask tm = mask_of(t);
        TropScalar best;
        for (const auto& rr : combinations(n, d))
        {
            Mask rm = mask_of(rr);
            if ((rm & tm) != tm)
                continue;
            Mask sm = tm | (full_mask(n) & ~rm);
            best = oplus(best, p.at_mask(rm) + q.at_mask(sm));
        }
        v.push_back(best);
    }
    return PluckerVector(r, n, std::move(v));
}

PluckerVector stable_union(const PluckerVector& p, const PluckerVector& q)
{
    const int n = p.n();
    if (q.n() != n)
        throw Error("DIMENSION_MISMATCH", "ground sets differ");
    const int d = p.d(), e = q.d();
    if (d + e > n)
        throw Error("PRECONDITION", "stable union needs d + e <= n");
    std::vector<TropScalar> v;
    for (const auto& t : combinations(n, d + e))
    {
        Mask tm = mask_of(t);
        TropScalar best;
        for (const auto& rr : combinations(d + e, d))
        {
            Mask rm = 0;
            for (int k : rr)
                rm |= Mask(1) << t[k];
            best = oplus(best, p.at_mask(rm) + q.at_mask(tm & ~rm));
        }
        v.push_back(best);
    }
    return PluckerVector(d + e, n, std::move(v));
}

PluckerVector stable_union_of_rows(const TropMatrix& a)
{
    PluckerVector acc = rank_zero(a.n());
    for (int i = 0; i < a.d(); ++i)
        acc = stable_union(acc, point_vector(a.row(i)));
    return acc;
}

Matroid underlying_matroid(const PluckerVector& p)
{
    std::vector<Subset> bases;
    auto subs = p.subsets();
    for (std::size_t k = 0; k < subs.size(); ++k)
        if (p.values()[k].is_finite())
            bases.push_back(subs[k]);
    return Matroid(p.n(), p.d(), bases);
}

TropVector cocircuit(const PluckerVector& p, const Subset& s)
{
    const int n = p.n();
    if (static_cast<int>(s.size()) != p.d() - 1)
        throw Error("DIMENSION_MISMATCH", "cocircuit needs a (d-1)-subset");
    Mask sm = mask_of(s);
    std::vector<TropScalar> c(n);
    bool any = false;
    for (int j = 0; j < n; ++j)
    {
        if (has(sm, j))
            continue;
        c[j] = p.at_mask(sm | (Mask(1) << j));
        any = any || c[j].is_finite();
    }
    if (!any)
        throw Error("PRECONDITION", "every p_{S+j} is infinite");
    TropVector out(std::move(c));
    if (!contains(p, out))
        throw Error("INTERNAL", "cocircuit fails the linear space membership test");
    if (!underlying_matroid(p).is_cocircuit(mask_of(out.support())))
        throw Error("INTERNAL", "cocircuit support is not a matroid cocircuit");
    return out;
}

TropMatrix recover_matrix(const PluckerVector& p, const BipartiteGraph& sigma)
{
    if (sigma.d() != p.d() || sigma.n() != p.n())
        throw Error("DIMENSION_MISMATCH", "support set and Plücker vector sizes differ");
    if (!is_support_set(sigma))
        throw Error("PRECONDITION", "recovery needs a support set");
    if (underlying_matroid(p) != Matroid::uniform(p.d(), p.n()))
        throw Error("PRECONDITION", "recovery needs a uniform underlying matroid");
    std::vector<TropScalar> e;
    for (int i = 0; i < p.d(); ++i)
    {
        Subset s = subset_of(full_mask(p.n()) & ~sigma.row_neighbors(i));
        TropVector row = cocircuit(p, s);
        e.insert(e.end(), row.entries().begin(), row.entries().end());
    }
    return TropMatrix(p.d(), p.n(), std::move(e));
}

}   // namespace stiefel
