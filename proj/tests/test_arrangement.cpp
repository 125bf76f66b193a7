#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "stiefel/arrangement.hpp"
#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"
#include "stiefel/random.hpp"

using namespace stiefel;
using fixtures::vec;

namespace {

BipartiteGraph transposed(const BipartiteGraph& g)
{
    std::vector<Edge> e;
    for (auto [i, j] : g.edges())
        e.emplace_back(j, i);
    return BipartiteGraph(g.n(), g.d(), e);
}

/** Single-row tuples such as (2,3,1,1,2,3). */
Covector tuple_of_rows(int d, std::initializer_list<int> rows)
{
    std::vector<std::vector<int>> t;
    for (int r : rows)
        t.push_back({r});
    return graph_from_tuple(d, t);
}

bool all_degrees_positive(const BipartiteGraph& g)
{
    for (int i = 0; i < g.d(); ++i)
        if (g.row_degree(i) == 0)
            return false;
    for (int j = 0; j < g.n(); ++j)
        if (g.col_degree(j) == 0)
            return false;
    return true;
}

TropMatrix small_random(Rng& rng, int max_d, int max_n)
{
    int d = static_cast<int>(rng.uniform(1, max_d));
    int n = static_cast<int>(rng.uniform(d, max_n));
    return gen_matrix(d, n, rng.coin() ? GenMode::Dense : GenMode::SupportSet, rng, -3, 3);
}

}   // namespace

TEST_CASE("covectors of points")
{
    CHECK(covector_of_point(fixtures::arrangement_3x5(), vec({"0", "0", "0"}))
          == graph_from_tuple(3, {{1}, {2}, {1, 2, 3}, {3}, {3}}));
    CHECK(covector_of_point(fixtures::staircase_3x4(), vec({"0", "0", "0"}))
          == graph_from_tuple(3, {{1}, {1, 2}, {2, 3}, {3}}));
    CHECK(covector_of_point(TropMatrix::zero(2, 2), vec({"5", "5"})) == BipartiteGraph::complete(2, 2));
    CHECK(covector_of_point(fixtures::arrangement_3x5(), vec({"0", "0", "0"})).tuple_string()
          == "({1},{2},{1,2,3},{3},{3})");

    TropMatrix empty_col = fixtures::rows({{"0", "inf"}, {"0", "inf"}});
    CHECK_THROWS_AS(covector_of_point(empty_col, vec({"0", "0"})), Error);
}

TEST_CASE("transpose covectors")
{
    CHECK(transpose_covector(fixtures::staircase_3x4(), vec({"0", "0", "0", "0"}))
          == fixtures::staircase_3x4().support());
    CHECK(transpose_covector(fixtures::two_row(), vec({"0", "0", "0", "0"}))
          == BipartiteGraph::from_one_based(2, 4, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}}));

    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial)
    {
        TropMatrix a = small_random(rng, 3, 5);
        TropVector y = gen_vector(a.n(), rng, -4, 4);
        std::vector<TropScalar> moved;
        for (const auto& v : y.entries())
            moved.push_back(v + TropScalar(3));
        BipartiteGraph g = transpose_covector(a, y);
        CHECK(transpose_covector(a, TropVector(moved)) == g);
        CHECK(transposed(covector_of_point(a.transposed(), y)) == g);
    }
}

TEST_CASE("covector complex examples")
{
    ArrangementComplex tc = enumerate_covectors(fixtures::two_row());
    CHECK(tc.size() == 5);
    CHECK(tc.contains(graph_from_tuple(2, {{1}, {1}, {1}, {1}})));
    CHECK(tc.contains(graph_from_tuple(2, {{2}, {2}, {2}, {2}})));
    CHECK(tc.contains(graph_from_tuple(2, {{1, 2}, {1, 2}, {1}, {1}})));
    CHECK(tc.contains(graph_from_tuple(2, {{2}, {2}, {1, 2}, {1, 2}})));
    auto mid = tc.find(graph_from_tuple(2, {{2}, {2}, {1}, {1}}));
    REQUIRE(mid);
    CHECK(tc.cells()[*mid].dimension == 1);
    CHECK(tc.maximal_covectors().size() == 2);

    Covector pos = tuple_of_rows(4, {2, 3, 1, 1, 2, 3});
    Covector neg = tuple_of_rows(4, {3, 1, 2, 1, 2, 3});
    ArrangementComplex plus = enumerate_covectors(fixtures::family_4x6(Rational(1, 2)));
    ArrangementComplex minus = enumerate_covectors(fixtures::family_4x6(Rational(-1, 2)));
    CHECK(plus.contains(pos));
    CHECK_FALSE(plus.contains(neg));
    CHECK(minus.contains(neg));
    CHECK_FALSE(minus.contains(pos));

    ArrangementComplex single = enumerate_covectors(TropMatrix::zero(1, 4));
    REQUIRE(single.size() == 1);
    CHECK(single.cells()[0].covector == BipartiteGraph::complete(1, 4));
    CHECK(single.cells()[0].dimension == 0);

    CHECK_THROWS_AS(enumerate_covectors(TropMatrix::zero(5, 6)), Error);
}

TEST_CASE("cell membership in B and K")
{
    Covector vertex = graph_from_tuple(3, {{1}, {1, 2}, {2, 3}, {3}});
    CHECK(in_B(vertex));
    CHECK(in_K(vertex));
    Covector ray = graph_from_tuple(2, {{1}, {1}, {1}, {1}});
    CHECK_FALSE(in_B(ray));
    CHECK_FALSE(in_K(ray));
    CHECK(in_K(graph_from_tuple(2, {{2}, {2}, {1}, {1}})));

    // Vertex cells of support-set arrangements cover every row.
    Rng rng(73);
    for (int trial = 0; trial < 20; ++trial)
    {
        int d = static_cast<int>(rng.uniform(2, 3));
        TropMatrix a = gen_matrix(d, static_cast<int>(rng.uniform(d + 1, 5)), GenMode::SupportSet, rng, -3, 3);
        ArrangementComplex tc = enumerate_covectors(a);
        for (const auto& c : tc.cells())
            if (c.dimension == 0)
                CHECK(in_B(c.covector));
    }
}

TEST_CASE("tropical singularity")
{
    CHECK(is_trop_singular(TropMatrix::zero(2, 2)));
    CHECK_FALSE(is_trop_singular(fixtures::rows({{"0", "1"}, {"1", "0"}})));
    CHECK(is_trop_singular(fixtures::family_4x6(Rational(0)).submatrix({0, 1, 2}, {0, 1, 2})));
    CHECK(is_trop_singular(fixtures::rows({{"0", "inf"}, {"0", "inf"}})));
}

TEST_CASE("cells cover the torus with disjoint relative interiors")
{
    Rng rng(79);
    int points = 0;
    for (int trial = 0; trial < 25; ++trial)
    {
        TropMatrix a = small_random(rng, 3, 5);
        ArrangementComplex tc = enumerate_covectors(a);
        std::vector<PolyhedronAnalysis> info;
        for (const auto& c : tc.cells())
        {
            info.push_back(analyze(c.polyhedron));
            CHECK(info.back().dimension == c.dimension);
            CHECK(covector_of_point(a, c.interior_point) == c.covector);
        }
        for (int s = 0; s < 40; ++s, ++points)
        {
            RVec x{Rational(0)};
            for (int i = 1; i < a.d(); ++i)
                x.push_back(rng.coin(0.3) ? Rational(rng.uniform(-4, 4)) : rng.rational(-4, 4, 2));
            Covector tau = covector_of_point(a, x);
            int hits = 0;
            for (std::size_t k = 0; k < tc.size(); ++k)
            {
                bool inside = in_relative_interior(tc.cells()[k].polyhedron, info[k], x);
                hits += inside;
                if (inside)
                    CHECK(tc.cells()[k].covector == tau);
            }
            CHECK(hits == 1);
        }
    }
    CHECK(points == 1000);
}

TEST_CASE("covector order reverses face inclusion")
{
    Rng rng(83);
    for (int trial = 0; trial < 25; ++trial)
    {
        TropMatrix a = small_random(rng, 3, 5);
        ArrangementComplex tc = enumerate_covectors(a);
        for (std::size_t f = 0; f < tc.size(); ++f)
        {
            for (std::size_t g = 0; g < tc.size(); ++g)
            {
                if (f == g || !tc.face_of(f, g))
                    continue;
                const Covector& cf = tc.cells()[f].covector;
                const Covector& cg = tc.cells()[g].covector;
                CHECK(cg.is_subgraph_of(cf));
                CHECK(cf != cg);
                CHECK(tc.cells()[f].dimension < tc.cells()[g].dimension);
            }
        }
    }
}

TEST_CASE("enumeration agrees with sampled covectors")
{
    Rng rng(89);
    for (int trial = 0; trial < 40; ++trial)
    {
        TropMatrix a = small_random(rng, 3, 5);
        ArrangementComplex tc = enumerate_covectors(a);
        std::set<Covector> sampled = oracles::sampled_covectors(a);
        std::set<Covector> listed;
        for (const auto& c : tc.cells())
            listed.insert(c.covector);
        CHECK(sampled == listed);
    }
}

TEST_CASE("optimal matchings are read off the covectors")
{
    Rng rng(97);
    for (int trial = 0; trial < 30; ++trial)
    {
        TropMatrix a = small_random(rng, 3, 5);
        MatchingMultifield lam = matching_multifield(a);
        ArrangementComplex tc = enumerate_covectors(a);
        for (const auto& j : combinations(a.n(), a.d()))
        {
            std::set<Matching> from_tc;
            std::vector<int> perm(j);
            do
            {
                Matching m{perm};
                BipartiteGraph g = m.as_graph(a.n());
                for (const auto& c : tc.cells())
                {
                    if (g.is_subgraph_of(c.covector))
                    {
                        from_tc.insert(m);
                        break;
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            const auto& expect = lam.at(j);
            CHECK(from_tc == std::set<Matching>(expect.begin(), expect.end()));
        }
    }
}

TEST_CASE("transpose duality of arrangements")
{
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial)
    {
        int d = static_cast<int>(rng.uniform(2, 3));
        int n = static_cast<int>(rng.uniform(2, 3));
        TropMatrix a = gen_on_support(BipartiteGraph::complete(d, n), rng, -3, 3);
        std::set<BipartiteGraph> left, right;
        ArrangementComplex tc = enumerate_covectors(a);
        ArrangementComplex tt = enumerate_covectors(a.transposed());
        for (const auto& c : tc.cells())
            if (all_degrees_positive(c.covector))
                left.insert(c.covector);
        for (const auto& c : tt.cells())
            if (all_degrees_positive(c.covector))
                right.insert(transposed(c.covector));
        CHECK(left == right);
    }
}
