#include "stiefel/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "stiefel/error.hpp"

namespace stiefel {

namespace {

bool lex_less(Mask a, Mask b)
{
    return subset_of(a) < subset_of(b);
}

}   // namespace

Matroid::Matroid(int n, int rank, const std::vector<Subset>& bases) : n_(n), rank_(rank)
{
    std::vector<Mask> m;
    m.reserve(bases.size());
    for (const auto& b : bases)
        m.push_back(mask_of(b));
    *this = from_masks(n, rank, std::move(m));
}

Matroid Matroid::from_masks(int n, int rank, std::vector<Mask> bases)
{
    if (n < 0 || n > kMaxGround || rank < 0 || rank > n)
        throw Error("DIMENSION_MISMATCH", "matroid ground size or rank out of range");
    for (Mask b : bases)
    {
        if (popcount(b) != rank || (b & ~full_mask(n)) != 0)
            throw Error("DIMENSION_MISMATCH", "basis has the wrong size or leaves the ground set");
    }
    std::sort(bases.begin(), bases.end(), lex_less);
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    Matroid m;
    m.n_ = n;
    m.rank_ = rank;
    m.bases_ = std::move(bases);
    return m;
}

Matroid Matroid::uniform(int rank, int n)
{
    return Matroid(n, rank, combinations(n, rank));
}

std::vector<Subset> Matroid::bases() const
{
    std::vector<Subset> out;
    out.reserve(bases_.size());
    for (Mask b : bases_)
        out.push_back(subset_of(b));
    return out;
}

bool Matroid::is_basis(Mask b) const
{
    return std::binary_search(bases_.begin(), bases_.end(), b, lex_less);
}

Mask Matroid::loops() const
{
    Mask used = 0;
    for (Mask b : bases_)
        used |= b;
    return full_mask(n_) & ~used;
}

Mask Matroid::coloops() const
{
    if (bases_.empty())
        return 0;
    Mask all = full_mask(n_);
    for (Mask b : bases_)
        all &= b;
    return all;
}

int Matroid::rank_of(Mask s) const
{
    int r = 0;
    for (Mask b : bases_)
        r = std::max(r, popcount(b & s));
    return r;
}

int Matroid::components() const
{
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
        {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    // i and j share a component iff some basis exchange B − i + j is a basis.
    for (Mask b : bases_)
    {
        for (int i = 0; i < n_; ++i)
        {
            if (!has(b, i))
                continue;
            for (int j = 0; j < n_; ++j)
            {
                if (has(b, j) || find(i) == find(j))
                    continue;
                Mask b2 = (b & ~(Mask(1) << i)) | (Mask(1) << j);
                if (is_basis(b2))
                    parent[find(i)] = find(j);
            }
        }
    }
    int c = 0;
    for (int x = 0; x < n_; ++x)
        if (find(x) == x)
            ++c;
    return c;
}

bool Matroid::is_cocircuit(Mask c) const
{
    auto meets_all = [&](Mask s) {
        for (Mask b : bases_)
            if ((b & s) == 0)
                return false;
        return true;
    };
    if (c == 0 || !meets_all(c))
        return false;
    for (int j = 0; j < n_; ++j)
        if (has(c, j) && meets_all(c & ~(Mask(1) << j)))
            return false;
    return true;
}

bool Matroid::is_contained_in(const Matroid& other) const
{
    if (n_ != other.n_ || rank_ != other.rank_)
        return false;
    for (Mask b : bases_)
        if (!other.is_basis(b))
            return false;
    return true;
}

bool Matroid::satisfies_exchange() const
{
    for (Mask a : bases_)
    {
        for (Mask b : bases_)
        {
            for (int x = 0; x < n_; ++x)
            {
                if (!has(a, x) || has(b, x))
                    continue;
                bool found = false;
                for (int y = 0; y < n_ && !found; ++y)
                {
                    if (!has(b, y) || has(a, y))
                        continue;
                    found = is_basis((a & ~(Mask(1) << x)) | (Mask(1) << y));
                }
                if (!found)
                    return false;
            }
        }
    }
    return true;
}

std::string Matroid::to_string() const
{
    std::string out = "[";
    for (std::size_t k = 0; k < bases_.size(); ++k)
    {
        if (k)
            out += ',';
        out += "[" + format_subset(subset_of(bases_[k])) + "]";
    }
    return out + "]";
}

std::strong_ordering operator<=>(const Matroid& a, const Matroid& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    if (auto c = a.rank_ <=> b.rank_; c != 0)
        return c;
    return a.bases() <=> b.bases();
}

}   // namespace stiefel
