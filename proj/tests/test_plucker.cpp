#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "stiefel/error.hpp"
#include "stiefel/linspace.hpp"
#include "stiefel/plucker.hpp"
#include "stiefel/random.hpp"

using namespace stiefel;
using fixtures::vec;

namespace {

PluckerVector from_list(int d, int n, std::initializer_list<long> values)
{
    std::vector<TropScalar> v;
    for (long x : values)
        v.emplace_back(x);
    return PluckerVector(d, n, std::move(v));
}

PluckerVector random_valid(int d, int n, Rng& rng)
{
    return stiefel_map(gen_matrix(d, n, GenMode::Dense, rng, -4, 4));
}

}   // namespace

TEST_CASE("stiefel map examples")
{
    CHECK(stiefel_map(fixtures::staircase_3x4()) == from_list(3, 4, {0, 0, 0, 0}));
    CHECK(stiefel_map(fixtures::two_row()) == from_list(2, 4, {0, 0, 0, 0, 0, 1}));
    CHECK(stiefel_map(fixtures::two_row_support()) == from_list(2, 4, {0, 1, 1, 0, 0, 1}));

    TropMatrix none = fixtures::rows({{"0", "inf"}, {"0", "inf"}});
    CHECK_THROWS_AS(stiefel_map(none), Error);
}

TEST_CASE("stiefel map agrees with the permutation oracle")
{
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(d, 6));
        TropMatrix a = gen_matrix(d, n, trial % 2 ? GenMode::Dense : GenMode::SupportSet, rng, -5, 5);
        PluckerVector p = stiefel_map(a);
        for (const auto& j : combinations(n, d))
            CHECK(p.at(j) == oracles::permutation_minimum(a, j));
    }
}

TEST_CASE("three-term relations")
{
    CHECK(check_plucker(from_list(2, 4, {0, 0, 0, 0, 0, 0})));
    CHECK_FALSE(check_plucker(from_list(2, 4, {-1, 0, 0, 0, 0, -1})));

    Rng rng(43);
    for (int trial = 0; trial < 200; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(d, 6));
        GenMode mode = trial % 3 == 0 ? GenMode::Dense : trial % 3 == 1 ? GenMode::SupportSet : GenMode::Pointed;
        CHECK(check_plucker(stiefel_map(gen_matrix(d, n, mode, rng, -5, 5))));
    }
}

TEST_CASE("duality")
{
    CHECK(dual(from_list(2, 4, {0, 0, 0, 0, 0, 0})) == from_list(2, 4, {0, 0, 0, 0, 0, 0}));
    PluckerVector p = from_list(2, 4, {0, 1, 1, 0, 0, 1});
    PluckerVector ps = dual(p);
    CHECK(ps.at({2, 3}) == TropScalar(0));
    CHECK(ps.at({1, 3}) == TropScalar(1));
    CHECK(ps.at({0, 1}) == TropScalar(1));

    Rng rng(47);
    for (int trial = 0; trial < 50; ++trial)
    {
        PluckerVector q = random_valid(static_cast<int>(rng.uniform(1, 3)), 5, rng);
        CHECK(dual(dual(q)) == q);
        CHECK(check_plucker(dual(q)));
    }
}

TEST_CASE("stable intersection")
{
    PluckerVector z = from_list(2, 3, {0, 0, 0});
    CHECK(stable_intersection(z, z) == from_list(1, 3, {0, 0, 0}));
    CHECK_THROWS_AS(stable_intersection(from_list(1, 3, {0, 0, 0}), from_list(1, 3, {0, 0, 0})), Error);

    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial)
    {
        const int n = 5;
        PluckerVector p = random_valid(3, n, rng);
        PluckerVector q = dual(random_valid(1, n, rng));
        PluckerVector r = trial % 2 ? random_valid(4, n, rng) : dual(random_valid(1, n, rng));
        PluckerVector pq = stable_intersection(p, q);
        CHECK(check_plucker(pq));
        CHECK(stable_intersection(pq, r) == stable_intersection(p, stable_intersection(q, r)));
    }
}

TEST_CASE("stable union")
{
    TropMatrix st = fixtures::staircase_3x4();
    CHECK(stable_union_of_rows(st) == stiefel_map(st));

    PluckerVector p = from_list(2, 4, {0, 1, 1, 0, 0, 1});
    CHECK(stable_union(p, rank_zero(4)) == p);
    CHECK(stable_union(rank_zero(4), p) == p);
    CHECK_THROWS_AS(stable_union(p, from_list(3, 4, {0, 0, 0, 0})), Error);

    Rng rng(59);
    for (int trial = 0; trial < 100; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(d, 6));
        TropMatrix a = gen_matrix(d, n, trial % 2 ? GenMode::Dense : GenMode::SupportSet, rng, -5, 5);
        CHECK(stable_union_of_rows(a) == stiefel_map(a));

        std::vector<TropScalar> u, v, w;
        for (int j = 0; j < 6; ++j)
        {
            u.emplace_back(rng.uniform(-3, 3));
            v.emplace_back(rng.uniform(-3, 3));
            w.emplace_back(rng.uniform(-3, 3));
        }
        PluckerVector pu = point_vector(u), pv = point_vector(v), pw = point_vector(w);
        CHECK(stable_union(stable_union(pu, pv), pw) == stable_union(pu, stable_union(pv, pw)));
    }
}

TEST_CASE("underlying matroids")
{
    CHECK(underlying_matroid(from_list(2, 4, {0, 0, 0, 0, 0, 0})) == Matroid::uniform(2, 4));
    CHECK(underlying_matroid(stiefel_map(fixtures::two_row_support())) == Matroid::uniform(2, 4));
    std::vector<TropScalar> one(6);
    one[2] = TropScalar(5);
    Matroid m = underlying_matroid(PluckerVector(2, 4, one));
    CHECK(m.size() == 1);
    CHECK(m.bases()[0] == Subset{0, 3});
}

TEST_CASE("cocircuits")
{
    CHECK(cocircuit(from_list(3, 4, {0, 0, 0, 0}), {0, 1}) == vec({"inf", "inf", "0", "0"}));
    PluckerVector p = stiefel_map(fixtures::two_row_support());
    CHECK(cocircuit(p, {1}) == vec({"0", "inf", "0", "0"}));
    CHECK(cocircuit(p, {0}) == vec({"inf", "0", "1", "1"}));

    std::vector<TropScalar> one(6);
    one[0] = TropScalar(0);
    CHECK_THROWS_AS(cocircuit(PluckerVector(2, 4, one), {2}), Error);

    Rng rng(61);
    for (int trial = 0; trial < 50; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 3));
        PluckerVector q = stiefel_map(gen_matrix(d, 5, GenMode::SupportSet, rng, -4, 4));
        Rational c(rng.uniform(-5, 5));
        for (const auto& s : combinations(5, d - 1))
        {
            bool any = false;
            for (int j = 0; j < 5; ++j)
                any = any || (std::find(s.begin(), s.end(), j) == s.end() && q.at_mask(mask_of(s) | Mask(1) << j).is_finite());
            if (!any)
                continue;
            TropVector cc = cocircuit(q, s);
            CHECK(contains(q, cc));
            std::vector<TropScalar> moved;
            for (const auto& e : cc.entries())
                moved.push_back(e + TropScalar(c));
            CHECK(cocircuit(q.shifted(c), s) == TropVector(moved));
        }
    }
}

TEST_CASE("matrix recovery")
{
    TropMatrix a = fixtures::two_row_support();
    CHECK(recover_matrix(stiefel_map(a), a.support()) == a);

    BipartiteGraph sigma = BipartiteGraph::from_one_based(2, 3, {{1, 1}, {1, 3}, {2, 2}, {2, 3}});
    CHECK(recover_matrix(from_list(2, 3, {0, 0, 0}), sigma) == fixtures::rows({{"0", "inf", "0"}, {"inf", "0", "0"}}));
    CHECK_THROWS_AS(recover_matrix(from_list(2, 3, {0, 0, 0}), BipartiteGraph::complete(2, 3)), Error);

    // Fibers of the Stiefel map over support-set matrices are row-constant orbits.
    Rng rng(67);
    for (int trial = 0; trial < 100; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(d + 1, 6));
        TropMatrix m = gen_matrix(d, n, GenMode::SupportSet, rng, -5, 5);
        std::vector<Rational> shift;
        for (int i = 0; i < d; ++i)
            shift.emplace_back(rng.uniform(-3, 3));
        TropMatrix moved = m.add_row_constants(shift);
        CHECK(equal_up_to_row_constants(recover_matrix(stiefel_map(moved), m.support()), m));
        CHECK(stiefel_map(moved).projectively_equal(stiefel_map(m)));
    }
}

TEST_CASE("canonical form")
{
    PluckerVector p = from_list(2, 4, {3, 4, 4, 3, 3, 4});
    CHECK(p.canonical() == from_list(2, 4, {0, 1, 1, 0, 0, 1}));
    CHECK(p.projectively_equal(from_list(2, 4, {0, 1, 1, 0, 0, 1})));
    CHECK_FALSE(p.projectively_equal(from_list(2, 4, {0, 1, 1, 0, 0, 0})));
}
