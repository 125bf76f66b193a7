/**
 * Seeded generators for matrices, graphs and vectors. Output depends only
 * on the seed.
 */

#ifndef STIEFEL_RANDOM_HPP
#define STIEFEL_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>

#include "stiefel/graph.hpp"
#include "stiefel/trop.hpp"

namespace stiefel {

class Rng
{
    private:
        std::mt19937_64 engine_;

    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        /** Uniform integer in [lo, hi]. */
        long uniform(long lo, long hi);

        /** p / denominator with p uniform in [lo·denominator, hi·denominator]. */
        Rational rational(long lo, long hi, long denominator);

        bool coin(double p = 0.5);

        std::mt19937_64& engine() { return engine_; }
};

enum class GenMode { Dense, SupportSet, Pointed };

/** "dense", "support-set" or "pointed"; PARSE otherwise. */
GenMode parse_gen_mode(const std::string& name);

/**
 * The pointed support set: (i,i) for i ≤ d and every (i,j) with j > d.
 */
BipartiteGraph pointed_support_set(int d, int n);

/**
 * A random matrix with integer entries in [lo, hi]. Dense fills every
 * entry; support-set picks a support set uniformly from the enumeration;
 * pointed uses the pointed support set. Needs 1 ≤ d ≤ n.
 */
TropMatrix gen_matrix(int d, int n, GenMode mode, Rng& rng, long lo = 0, long hi = 9);
TropMatrix gen_matrix(int d, int n, GenMode mode, std::uint64_t seed, long lo = 0, long hi = 9);

/** Integer entries in [lo, hi] on the edges of g, ∞ elsewhere. */
TropMatrix gen_on_support(const BipartiteGraph& g, Rng& rng, long lo = 0, long hi = 9);

/** Each edge of [d] × [n] kept with probability p. */
BipartiteGraph gen_graph(int d, int n, double p, Rng& rng);

/** Finite integer vector with entries in [lo, hi]. */
TropVector gen_vector(int n, Rng& rng, long lo, long hi);

}   // namespace stiefel

#endif
