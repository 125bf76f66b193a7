/**
 * Exact rational linear algebra and small polyhedral computations:
 * LP by two-phase simplex with Bland's rule, strict feasibility,
 * implicit equalities, affine dimension, relative-interior points and
 * face enumeration.
 */

#ifndef STIEFEL_GEOM_HPP
#define STIEFEL_GEOM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "stiefel/trop.hpp"

namespace stiefel {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

Rational dot(const RVec& a, const RVec& x);

/** Row rank over the rationals. */
int matrix_rank(RMat rows);

/** Basis of {v : rows · v = 0} in ℚ^ncols. */
RMat nullspace(RMat rows, int ncols);

/** ⟨a, x⟩ (relation) b. */
struct Constraint
{
    RVec a;
    Rational b;
};

class LinearConstraintSystem
{
    private:
        int dim_;
        std::vector<Constraint> eq_;
        std::vector<Constraint> weak_;
        std::vector<Constraint> strict_;

        void check(const RVec& a) const;

    public:
        explicit LinearConstraintSystem(int dim) : dim_(dim) {}

        int dim() const { return dim_; }
        const std::vector<Constraint>& equalities() const { return eq_; }
        const std::vector<Constraint>& weak() const { return weak_; }
        const std::vector<Constraint>& strict() const { return strict_; }

        /** ⟨a,x⟩ = b */
        void add_equality(RVec a, Rational b);
        /** ⟨a,x⟩ ≥ b */
        void add_weak(RVec a, Rational b);
        /** ⟨a,x⟩ > b */
        void add_strict(RVec a, Rational b);
        /** ⟨a,x⟩ ≤ b */
        void add_weak_upper(RVec a, Rational b);
        /** ⟨a,x⟩ < b */
        void add_strict_upper(RVec a, Rational b);

        bool satisfied_by(const RVec& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RVec point;
};

/**
 * Maximizes ⟨c, x⟩ over the equalities and weak inequalities of sys
 * (strict constraints are rejected with PRECONDITION).
 */
LpResult lp_maximize(const LinearConstraintSystem& sys, const RVec& c);

/**
 * A point satisfying every constraint (strict ones strictly), or nullopt.
 * The witness is checked exactly before being returned.
 */
std::optional<RVec> strict_feasible(const LinearConstraintSystem& sys);

/**
 * H-polyhedron {x : ⟨e,x⟩ = f for equalities, ⟨a,x⟩ ≥ b for inequalities}.
 * Inequality indices are stable and used to name faces.
 */
class Polyhedron
{
    private:
        int dim_ = 0;
        std::vector<Constraint> eq_;
        std::vector<Constraint> ineq_;

    public:
        Polyhedron() = default;
        explicit Polyhedron(int dim) : dim_(dim) {}
        Polyhedron(int dim, std::vector<Constraint> equalities, std::vector<Constraint> inequalities);

        int dim() const { return dim_; }
        const std::vector<Constraint>& equalities() const { return eq_; }
        const std::vector<Constraint>& inequalities() const { return ineq_; }

        void add_equality(RVec a, Rational b);
        void add_inequality(RVec a, Rational b);
        void add_upper(RVec a, Rational b);

        bool contains(const RVec& x) const;

        /** The same inequality list, with the listed inequalities also imposed as equalities. */
        Polyhedron with_tight(const std::vector<int>& indices) const;

        /** Intersection in the same ambient space (inequality lists concatenated). */
        Polyhedron intersect(const Polyhedron& other) const;

        LinearConstraintSystem as_system() const;
};

struct PolyhedronAnalysis
{
    bool empty = true;
    /** implicit[k]: inequality k holds with equality on the whole polyhedron. */
    std::vector<bool> implicit;
    RVec interior_point;
    int dimension = -1;
};

/** Emptiness, implicit equalities, a relative-interior point and the dimension. */
PolyhedronAnalysis analyze(const Polyhedron& p);

/** Dimension of the affine hull; −1 iff empty. */
int affine_dimension(const Polyhedron& p);

std::optional<RVec> relative_interior_point(const Polyhedron& p);

/** x lies in p with every non-implicit inequality strict. */
bool in_relative_interior(const Polyhedron& p, const PolyhedronAnalysis& info, const RVec& x);

/**
 * Dimension of the image of p under x ↦ M x + t (only the linear part M
 * matters); −1 if p is empty.
 */
int affine_image_dimension(const Polyhedron& p, const RMat& m);

struct Face
{
    /** Inequalities tight on the whole face (includes implicit equalities of p). */
    std::vector<int> tight;
    int dimension = -1;
    RVec interior_point;
    Polyhedron polyhedron;
};

/**
 * All nonempty faces of p (including p itself), ordered by decreasing
 * dimension and then by tight set. Throws BUDGET_EXCEEDED past budget faces.
 */
std::vector<Face> enumerate_faces(const Polyhedron& p, std::size_t budget = 100000);

/** Face f ⊆ face g, for faces of the same polyhedron. */
bool face_contained_in(const Face& f, const Face& g);

}   // namespace stiefel

#endif
