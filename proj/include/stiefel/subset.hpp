/**
 * Sorted index subsets of [n] (0-based internally, 1-based in text).
 */

#ifndef STIEFEL_SUBSET_HPP
#define STIEFEL_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stiefel {

using Subset = std::vector<int>;
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 31;

inline Mask mask_of(const Subset& s)
{
    Mask m = 0;
    for (int j : s)
        m |= Mask(1) << j;
    return m;
}

inline Subset subset_of(Mask m)
{
    Subset s;
    while (m)
    {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline bool has(Mask m, int j) { return (m >> j) & 1u; }

long long binomial(int n, int k);

/** All k-subsets of {0,...,n-1} in lexicographic order. */
std::vector<Subset> combinations(int n, int k);

/** Position of a k-subset of [n] in the lexicographic order of combinations(n, k). */
std::size_t combination_rank(const Subset& s, int n);

Subset complement(const Subset& s, int n);

/** "1,3,4" for the 0-based subset {0,2,3}. */
std::string format_subset(const Subset& s);

/** Inverse of format_subset; the empty string gives the empty set. */
Subset parse_subset(std::string_view text);

}   // namespace stiefel

#endif
