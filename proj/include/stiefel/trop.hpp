/**
 * Min-plus semiring: scalars, vectors, matrices, tropical products and
 * residuation. All arithmetic is exact over the rationals.
 */

#ifndef STIEFEL_TROP_HPP
#define STIEFEL_TROP_HPP

#include <compare>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "stiefel/graph.hpp"

namespace stiefel {

using Rational = mpq_class;

/** Canonical text of a rational: "p/q", or "p" when q = 1. */
std::string format_rational(const Rational& q);

/** Parses "p", "-p" or "p/q"; throws PARSE on malformed input or zero denominator. */
Rational parse_rational(const std::string& text);

/**
 * A rational number or +∞. Default-constructed scalars are ∞ (the neutral
 * element of ⊕).
 */
class TropScalar
{
    private:
        bool finite_ = false;
        Rational value_;

    public:
        TropScalar() = default;
        TropScalar(const Rational& v) : finite_(true), value_(v) {}
        TropScalar(long v) : finite_(true), value_(v) {}
        TropScalar(int v) : finite_(true), value_(v) {}

        static TropScalar infinity() { return TropScalar(); }

        bool is_finite() const { return finite_; }
        bool is_infinite() const { return !finite_; }

        /** The finite value; throws INFINITE_RESULT on ∞. */
        const Rational& value() const;

        /** "inf" or the canonical rational text. */
        std::string to_string() const;
        static TropScalar parse(const std::string& text);

        friend bool operator==(const TropScalar& a, const TropScalar& b)
        {
            if (a.finite_ != b.finite_)
                return false;
            return !a.finite_ || a.value_ == b.value_;
        }

        friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b)
        {
            if (!a.finite_ || !b.finite_)
                return b.finite_ <=> a.finite_;
            int c = cmp(a.value_, b.value_);
            return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
        }

        /** Tropical product ⊙ (ordinary sum, ∞ absorbing). */
        friend TropScalar operator+(const TropScalar& a, const TropScalar& b)
        {
            if (!a.finite_ || !b.finite_)
                return TropScalar();
            return TropScalar(Rational(a.value_ + b.value_));
        }

        friend TropScalar operator-(const TropScalar& a, const Rational& c)
        {
            if (!a.finite_)
                return TropScalar();
            return TropScalar(Rational(a.value_ - c));
        }
};

/** Tropical sum ⊕ = min. */
inline TropScalar oplus(const TropScalar& a, const TropScalar& b) { return b < a ? b : a; }

/** Tropical product ⊙ = +. */
inline TropScalar otimes(const TropScalar& a, const TropScalar& b) { return a + b; }

class TropVector
{
    private:
        std::vector<TropScalar> entries_;

    public:
        TropVector() = default;
        explicit TropVector(std::vector<TropScalar> entries) : entries_(std::move(entries)) {}
        explicit TropVector(const std::vector<Rational>& entries);
        TropVector(std::initializer_list<TropScalar> entries) : entries_(entries) {}

        std::size_t size() const { return entries_.size(); }
        const TropScalar& operator[](std::size_t k) const { return entries_[k]; }
        const std::vector<TropScalar>& entries() const { return entries_; }

        Subset support() const;
        bool all_finite() const;

        /** Finite values; throws INFINITE_RESULT if some entry is ∞. */
        std::vector<Rational> finite_values() const;

        /** Representative in the tropical torus: subtract the first coordinate. */
        TropVector normalized() const;

        /** Equality in the tropical torus (up to a global additive constant). */
        bool projectively_equal(const TropVector& other) const;

        std::string to_string() const;

        friend bool operator==(const TropVector&, const TropVector&) = default;
};

class TropMatrix
{
    private:
        int d_ = 0;
        int n_ = 0;
        std::vector<TropScalar> entries_;

    public:
        TropMatrix() = default;

        /** Raw constructor; only checks d, n ≥ 1 and the entry count (row-major). */
        TropMatrix(int d, int n, std::vector<TropScalar> entries);

        /** Row-major nested lists. */
        static TropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);

        /** Like from_rows, but rejects columns with empty support (EMPTY_COLUMN). */
        static TropMatrix checked(const std::vector<std::vector<TropScalar>>& rows);

        static TropMatrix zero(int d, int n);

        /** Matrix with entries on the support of g given by values (row-major over g's edges), ∞ elsewhere. */
        static TropMatrix on_support(const BipartiteGraph& g, const std::vector<Rational>& values);

        int d() const { return d_; }
        int n() const { return n_; }

        const TropScalar& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

        std::vector<TropScalar> row(int i) const;

        BipartiteGraph support() const;

        /** Throws EMPTY_COLUMN if some column is identically ∞. */
        void require_no_empty_column() const;

        /** Throws EMPTY_ROW if some row is identically ∞. */
        void require_no_empty_row() const;

        /** Submatrix on the given rows and columns. */
        TropMatrix submatrix(const Subset& rows, const Subset& cols) const;

        TropMatrix transposed() const;

        /** Adds c_i to row i (finite entries only). */
        TropMatrix add_row_constants(const std::vector<Rational>& c) const;

        /** Adds c_j to column j (finite entries only). */
        TropMatrix add_column_constants(const std::vector<Rational>& c) const;

        std::string to_string() const;

        friend bool operator==(const TropMatrix&, const TropMatrix&) = default;
};

/** (x ⊙ A)_j = min_i (x_i + a_ij); x must be finite of length d. */
TropVector vec_mat_mul(const TropVector& x, const TropMatrix& a);

/** x_i = max over j in J_i(supp A) of (y_j − a_ij); y must be finite of length n. */
TropVector residuation(const TropVector& y, const TropMatrix& a);

/** True if a and b differ by one additive constant per row (same support). */
bool equal_up_to_row_constants(const TropMatrix& a, const TropMatrix& b);

}   // namespace stiefel

#endif
