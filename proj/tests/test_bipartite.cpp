#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"
#include "stiefel/random.hpp"

using namespace stiefel;

namespace {

BipartiteGraph one_based(int d, int n, std::vector<Edge> edges)
{
    return BipartiteGraph::from_one_based(d, n, edges);
}

Subset cols(std::initializer_list<int> one_based_cols)
{
    Subset s;
    for (int c : one_based_cols)
        s.push_back(c - 1);
    return s;
}

/** Row neighborhoods J_1 = {1,2}, J_2 = {1,2,3,4}. */
BipartiteGraph nested_2x4()
{
    return one_based(2, 4, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {2, 4}});
}

}   // namespace

TEST_CASE("optimal matchings on the examples")
{
    MinMatchings m = min_matchings(fixtures::arrangement_3x5(), cols({1, 2, 3}));
    CHECK(m.value == TropScalar(0));
    REQUIRE(m.argmins.size() == 1);
    CHECK(m.argmins[0].cols == std::vector<int>{0, 1, 2});

    TropMatrix st = fixtures::staircase_3x4();
    for (const auto& j : combinations(4, 3))
        CHECK(min_matchings(st, j).value == TropScalar(0));

    for (const Rational& t : {Rational(-1, 2), Rational(0), Rational(1, 2)})
    {
        MinMatchings f = min_matchings(fixtures::family_4x6(t), cols({1, 2, 3, 4}));
        CHECK(f.value == TropScalar(0));
        REQUIRE(f.argmins.size() == 1);
        CHECK(f.argmins[0].cols == std::vector<int>{3, 2, 1, 0});
    }

    // Unsupported column sets give ∞ and no argmins.
    CHECK(min_matchings(fixtures::two_row_support(), cols({1, 2})).value == TropScalar(0));
    TropMatrix lonely = TropMatrix::from_rows({{TropScalar(0), TropScalar()}, {TropScalar(0), TropScalar()}});
    MinMatchings empty = min_matchings(lonely, cols({1, 2}));
    CHECK(empty.value.is_infinite());
    CHECK(empty.argmins.empty());
}

TEST_CASE("optimal matchings agree with permutation enumeration")
{
    Rng rng(23);
    for (int trial = 0; trial < 300; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 5));
        int n = static_cast<int>(rng.uniform(d, d + 3));
        BipartiteGraph g = gen_graph(d, n, 0.7, rng);
        TropMatrix a = gen_on_support(g, rng, -3, 3);
        for (const auto& j : combinations(n, d))
        {
            int ties = 0;
            TropScalar v = oracles::permutation_minimum(a, j, &ties);
            MinMatchings m = min_matchings(a, j);
            CHECK(m.value == v);
            CHECK(static_cast<int>(m.argmins.size()) == ties);
            MinMatchings h = min_matchings_assignment(a, j);
            CHECK(h.value == m.value);
            CHECK(h.argmins == m.argmins);
        }
    }
}

TEST_CASE("matching multifields")
{
    MatchingMultifield zero = matching_multifield(TropMatrix::zero(2, 3));
    for (const auto& [j, ms] : zero.choices())
        CHECK(ms.size() == 2);

    CHECK(matching_multifield(fixtures::family_4x6(Rational(1, 2)))
          == matching_multifield(fixtures::family_4x6(Rational(-1, 2))));

    MatchingMultifield f2 = matching_multifield(fixtures::arrangement_3x5());
    REQUIRE(f2.at(cols({1, 2, 3})).size() == 1);
    CHECK(f2.at(cols({1, 2, 3}))[0].cols == std::vector<int>{0, 1, 2});

    TropMatrix lonely = TropMatrix::from_rows({{TropScalar(0), TropScalar(), TropScalar(0)},
                                               {TropScalar(0), TropScalar(), TropScalar(0)}});
    try
    {
        matching_multifield(lonely);
        FAIL("expected an error");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == "NO_MATCHING_IN_SUPPORT");
    }
}

TEST_CASE("coherence")
{
    MatchingMultifield zero = matching_multifield(TropMatrix::zero(2, 4));
    auto w = is_coherent(zero);
    REQUIRE(w);
    CHECK(matching_multifield(*w) == zero);

    // Cyclic choices on {1,2}, {2,3}, {1,3} sum to 0 < 0.
    std::map<Subset, std::vector<Matching>> ch;
    for (const auto& j : combinations(4, 2))
        ch[j] = {Matching{{j[0], j[1]}}};
    ch[cols({1, 2})] = {Matching{{0, 1}}};
    ch[cols({2, 3})] = {Matching{{1, 2}}};
    ch[cols({1, 3})] = {Matching{{2, 0}}};
    CHECK_FALSE(is_coherent(MatchingMultifield(2, 4, ch)));

    Rng rng(29);
    for (int trial = 0; trial < 200; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 3));
        int n = static_cast<int>(rng.uniform(d, 5));
        TropMatrix a = gen_matrix(d, n, trial % 3 == 0 ? GenMode::SupportSet : GenMode::Dense, rng, 0, 4);
        MatchingMultifield lam = matching_multifield(a);
        auto wit = is_coherent(lam);
        REQUIRE(wit);
        CHECK(matching_multifield(*wit) == lam);
        CHECK(wit->support().is_subgraph_of(lam.support()));
    }
}

TEST_CASE("multifield validation")
{
    std::map<Subset, std::vector<Matching>> bad;
    bad[cols({1, 2})] = {Matching{{0, 2}}};
    CHECK_THROWS_AS(MatchingMultifield(2, 3, bad), Error);
}

TEST_CASE("support set predicates")
{
    BipartiteGraph fig = fixtures::arrangement_3x5().support();
    CHECK(hall_surplus_check(fig));
    CHECK(is_support_set(fig));
    CHECK(hall_surplus_check(BipartiteGraph::complete(3, 5)));
    CHECK_FALSE(hall_surplus_check(one_based(2, 3, {{1, 1}, {2, 1}, {1, 2}, {2, 2}})));
    CHECK(is_support_set(one_based(2, 3, {{1, 1}, {2, 2}, {1, 3}, {2, 3}})));
    CHECK_FALSE(is_support_set(BipartiteGraph::complete(2, 3)));
}

TEST_CASE("support set enumeration")
{
    auto s23 = enumerate_support_sets(2, 3);
    CHECK(s23.size() == 6);
    for (const auto& g : s23)
    {
        CHECK(is_tree(g));
        CHECK(g.row_degree(0) == 2);
        CHECK(g.row_degree(1) == 2);
    }
    CHECK(std::is_sorted(s23.begin(), s23.end()));
    CHECK(enumerate_support_sets(1, 4).size() == 1);
    CHECK_THROWS_AS(enumerate_support_sets(3, 6, 10), Error);

    // Independent count: choose an (n−d+1)-subset per row, keep those passing Hall.
    for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}, {3, 5}})
    {
        std::size_t count = 0;
        auto rowsets = combinations(n, n - d + 1);
        std::vector<std::size_t> pick(d, 0);
        while (true)
        {
            std::vector<Edge> e;
            for (int i = 0; i < d; ++i)
                for (int j : rowsets[pick[i]])
                    e.emplace_back(i, j);
            BipartiteGraph g(d, n, e);
            bool uniform = oracles::matchable_subsets(g).size() == static_cast<std::size_t>(binomial(n, d));
            count += uniform;
            int k = 0;
            while (k < d && ++pick[k] == rowsets.size())
                pick[k++] = 0;
            if (k == d)
                break;
        }
        auto all = enumerate_support_sets(d, n);
        CHECK(all.size() == count);
        for (const auto& g : all)
        {
            CHECK(is_support_set(g));
            CHECK(transversal_matroid(g) == Matroid::uniform(d, n));
            CHECK(support_face_dimension(g) == (d - 1) * (n - d - 1));
            if (n == d + 1)
                CHECK(is_tree(g));
        }
    }
}

TEST_CASE("transversal matroids and ranks")
{
    CHECK(transversal_matroid(fixtures::arrangement_3x5().support()) == Matroid::uniform(3, 5));
    Matroid m = transversal_matroid(nested_2x4());
    CHECK(m == Matroid(4, 2, {cols({1, 2}), cols({1, 3}), cols({1, 4}), cols({2, 3}), cols({2, 4})}));
    CHECK(transversal_matroid(one_based(2, 2, {{1, 1}, {2, 1}})).empty());

    CHECK(transversal_rank(nested_2x4(), mask_of(cols({3, 4}))) == 1);
    CHECK(transversal_rank(nested_2x4(), 0) == 0);
    CHECK(transversal_rank(fixtures::arrangement_3x5().support(), mask_of(cols({1, 2, 3}))) == 3);

    Rng rng(31);
    for (int trial = 0; trial < 500; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(1, 7));
        BipartiteGraph g = gen_graph(d, n, 0.4, rng);
        Mask s = static_cast<Mask>(rng.uniform(0, static_cast<long>(full_mask(n))));
        CHECK(transversal_rank(g, s) == max_matching_size(g, s));
        if (d <= n)
        {
            std::set<std::vector<int>> expect = oracles::matchable_subsets(g);
            auto bases = transversal_matroid(g).bases();
            CHECK(std::set<std::vector<int>>(bases.begin(), bases.end()) == expect);
            if (!bases.empty())
                CHECK(transversal_matroid(g).satisfies_exchange());
        }
    }
}

TEST_CASE("dragon conditions")
{
    CHECK(dragon_condition(one_based(2, 4, {{2, 1}, {2, 2}, {1, 3}, {1, 4}})));
    CHECK_FALSE(dragon_condition(one_based(2, 4, {{1, 1}, {1, 2}, {1, 3}, {1, 4}})));
    BipartiteGraph vertex = graph_from_tuple(3, {{1}, {1, 2}, {2, 3}, {3}});
    CHECK(dragon_condition(vertex));
    CHECK(colwise_dragon_condition(vertex, mask_of(cols({2, 3}))));
    CHECK_FALSE(colwise_dragon_condition(vertex, mask_of(cols({1}))));
    CHECK(colwise_dragon_condition(vertex, 0));
}

TEST_CASE("spanning trees without left leaves")
{
    BipartiteGraph path = one_based(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}});
    CHECK(spanning_tree_no_left_leaves(path) == path);

    auto check_tree = [](const BipartiteGraph& g) {
        BipartiteGraph t = spanning_tree_no_left_leaves(g);
        CHECK(is_tree(t));
        CHECK(t.is_subgraph_of(g));
        for (int i = 0; i < g.d(); ++i)
            CHECK(t.row_degree(i) >= 2);
    };
    check_tree(BipartiteGraph::complete(2, 3));
    BipartiteGraph fig = fixtures::arrangement_3x5().support();
    CHECK(spanning_tree_no_left_leaves(fig).size() == 7);
    check_tree(fig);

    Rng rng(37);
    int tested = 0;
    for (int trial = 0; trial < 300; ++trial)
    {
        int d = static_cast<int>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(d + 1, 7));
        BipartiteGraph g = gen_graph(d, n, 0.6, rng);
        if (!is_connected(g) || !every_edge_in_matching(g))
        {
            CHECK_THROWS_AS(spanning_tree_no_left_leaves(g), Error);
            continue;
        }
        check_tree(g);
        ++tested;
    }
    CHECK(tested > 20);
}

TEST_CASE("support face dimension")
{
    CHECK(support_face_dimension(fixtures::arrangement_3x5().support()) == 2);
    CHECK(support_face_dimension(one_based(2, 4, {{1, 1}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}})) == 1);
    CHECK(support_face_dimension(one_based(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}})) == 0);
}
