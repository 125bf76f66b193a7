/**
 * Example matrices shared by the unit tests and the acceptance binary.
 */

#ifndef STIEFEL_TESTS_FIXTURES_HPP
#define STIEFEL_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "stiefel/bipartite.hpp"
#include "stiefel/plucker.hpp"
#include "stiefel/trop.hpp"

namespace fixtures {

using stiefel::Rational;
using stiefel::TropMatrix;
using stiefel::TropScalar;
using stiefel::TropVector;

inline TropScalar s(const std::string& text) { return TropScalar::parse(text); }

inline TropMatrix rows(const std::vector<std::vector<std::string>>& r)
{
    std::vector<std::vector<TropScalar>> out;
    for (const auto& row : r)
    {
        std::vector<TropScalar> v;
        for (const auto& e : row)
            v.push_back(s(e));
        out.push_back(std::move(v));
    }
    return TropMatrix::from_rows(out);
}

inline TropVector vec(const std::vector<std::string>& v)
{
    std::vector<TropScalar> out;
    for (const auto& e : v)
        out.push_back(s(e));
    return TropVector(std::move(out));
}

/** The 3×5 arrangement matrix on a support set with nine edges. */
inline TropMatrix arrangement_3x5()
{
    return rows({{"0", "3", "0", "inf", "inf"}, {"inf", "0", "0", "2", "inf"}, {"inf", "inf", "0", "0", "0"}});
}

/** The 3×4 staircase matrix whose minors all vanish. */
inline TropMatrix staircase_3x4()
{
    return rows({{"0", "0", "inf", "inf"}, {"inf", "0", "0", "inf"}, {"inf", "inf", "0", "0"}});
}

/** The 4×6 family A(t) whose arrangement changes type at t = 0. */
inline TropMatrix family_4x6(const Rational& t)
{
    TropMatrix base = rows({{"inf", "0", "0", "0", "inf", "inf"},
                            {"0", "inf", "0", "inf", "0", "inf"},
                            {"0", "0", "inf", "inf", "inf", "0"},
                            {"0", "1", "2", "inf", "inf", "inf"}});
    std::vector<TropScalar> e;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j)
            e.push_back(i == 2 && j == 0 ? TropScalar(t) : base.at(i, j));
    return TropMatrix(4, 6, std::move(e));
}

/** Rows (0,0,0,0) and (0,0,1,1). */
inline TropMatrix two_row()
{
    return rows({{"0", "0", "0", "0"}, {"0", "0", "1", "1"}});
}

/** Rows (0,∞,0,0) and (∞,0,1,1), supported on a support set. */
inline TropMatrix two_row_support()
{
    return rows({{"0", "inf", "0", "0"}, {"inf", "0", "1", "1"}});
}

/** The 11×12 path support with zero entries. */
inline TropMatrix path_11x12()
{
    std::vector<stiefel::Edge> edges;
    for (int i = 0; i < 11; ++i)
    {
        edges.emplace_back(i, i);
        edges.emplace_back(i, i + 1);
    }
    stiefel::BipartiteGraph g(11, 12, edges);
    return TropMatrix::on_support(g, std::vector<Rational>(g.size(), Rational(0)));
}

/** Three cherries {1,2}, {3,4}, {5,6}: p = 0 on the cherries and −2 elsewhere. */
inline stiefel::PluckerVector snowflake()
{
    std::vector<TropScalar> v;
    for (const auto& j : stiefel::combinations(6, 2))
    {
        bool cherry = j[1] == j[0] + 1 && j[0] % 2 == 0;
        v.emplace_back(cherry ? 0 : -2);
    }
    return stiefel::PluckerVector(2, 6, std::move(v));
}

}   // namespace fixtures

#endif
