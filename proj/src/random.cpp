#include "stiefel/random.hpp"

#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"

namespace stiefel {

long Rng::uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

Rational Rng::rational(long lo, long hi, long denominator)
{
    Rational q(uniform(lo * denominator, hi * denominator), denominator);
    q.canonicalize();
    return q;
}

bool Rng::coin(double p)
{
    return std::bernoulli_distribution(p)(engine_);
}

GenMode parse_gen_mode(const std::string& name)
{
    if (name == "dense")
        return GenMode::Dense;
    if (name == "support-set")
        return GenMode::SupportSet;
    if (name == "pointed")
        return GenMode::Pointed;
    throw Error("PARSE", "unknown generator mode \"" + name + "\"");
}

BipartiteGraph pointed_support_set(int d, int n)
{
    if (d < 1 || d > n)
        throw Error("DIMENSION_MISMATCH", "pointed support sets need 1 <= d <= n");
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i)
    {
        edges.emplace_back(i, i);
        for (int j = d; j < n; ++j)
            edges.emplace_back(i, j);
    }
    return BipartiteGraph(d, n, std::move(edges));
}

TropMatrix gen_on_support(const BipartiteGraph& g, Rng& rng, long lo, long hi)
{
    std::vector<Rational> values;
    for (std::size_t k = 0; k < g.size(); ++k)
        values.emplace_back(rng.uniform(lo, hi));
    return TropMatrix::on_support(g, values);
}

namespace {

/** Few enough candidate graphs to enumerate all support sets. */
bool small_support_census(int d, int n)
{
    double count = 1;
    for (int i = 0; i < d; ++i)
        count *= static_cast<double>(combinations(n, n - d + 1).size());
    return count <= 20000;
}

}   // namespace

TropMatrix gen_matrix(int d, int n, GenMode mode, Rng& rng, long lo, long hi)
{
    if (d < 1 || d > n || n > kMaxGround)
        throw Error("DIMENSION_MISMATCH", "generation needs 1 <= d <= n <= 31");
    if (lo > hi)
        throw Error("PRECONDITION", "empty entry range");
    switch (mode)
    {
        case GenMode::Dense:
            return gen_on_support(BipartiteGraph::complete(d, n), rng, lo, hi);
        case GenMode::Pointed:
            return gen_on_support(pointed_support_set(d, n), rng, lo, hi);
        case GenMode::SupportSet:
        {
            if (small_support_census(d, n))
            {
                auto all = enumerate_support_sets(d, n);
                const auto& g = all[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(all.size()) - 1))];
                return gen_on_support(g, rng, lo, hi);
            }
            // Rejection over independent row choices has the same uniform law.
            std::vector<Subset> choices = combinations(n, n - d + 1);
            for (;;)
            {
                std::vector<Edge> edges;
                for (int i = 0; i < d; ++i)
                    for (int j : choices[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(choices.size()) - 1))])
                        edges.emplace_back(i, j);
                BipartiteGraph g(d, n, std::move(edges));
                if (hall_surplus_check(g))
                    return gen_on_support(g, rng, lo, hi);
            }
        }
    }
    throw Error("INTERNAL", "unhandled generator mode");
}

TropMatrix gen_matrix(int d, int n, GenMode mode, std::uint64_t seed, long lo, long hi)
{
    Rng rng(seed);
    return gen_matrix(d, n, mode, rng, lo, hi);
}

BipartiteGraph gen_graph(int d, int n, double p, Rng& rng)
{
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.coin(p))
                edges.emplace_back(i, j);
    return BipartiteGraph(d, n, std::move(edges));
}

TropVector gen_vector(int n, Rng& rng, long lo, long hi)
{
    std::vector<TropScalar> v;
    for (int j = 0; j < n; ++j)
        v.emplace_back(Rational(rng.uniform(lo, hi)));
    return TropVector(std::move(v));
}

}   // namespace stiefel
