#include "stiefel/trop.hpp"

#include "stiefel/error.hpp"

namespace stiefel {

std::string format_rational(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& text)
{
    auto bad = [&]() { return Error("PARSE", "malformed rational '" + text + "'"); };
    if (text.empty())
        throw bad();
    std::size_t slash = text.find('/');
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t k = 0;
        if (allow_sign && k < s.size() && (s[k] == '-' || s[k] == '+'))
            ++k;
        if (k == s.size())
            return false;
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                return false;
        return true;
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw bad();
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class p(num), q(den);
    if (q == 0)
        throw bad();
    Rational r(p, q);
    r.canonicalize();
    return r;
}

const Rational& TropScalar::value() const
{
    if (!finite_)
        throw Error("INFINITE_RESULT", "value of an infinite tropical scalar");
    return value_;
}

std::string TropScalar::to_string() const
{
    return finite_ ? format_rational(value_) : "inf";
}

TropScalar TropScalar::parse(const std::string& text)
{
    if (text == "inf" || text == "Infinity" || text == "∞")
        return TropScalar();
    return TropScalar(parse_rational(text));
}

TropVector::TropVector(const std::vector<Rational>& entries)
{
    entries_.reserve(entries.size());
    for (const auto& v : entries)
        entries_.emplace_back(v);
}

Subset TropVector::support() const
{
    Subset s;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k].is_finite())
            s.push_back(static_cast<int>(k));
    return s;
}

bool TropVector::all_finite() const
{
    for (const auto& e : entries_)
        if (!e.is_finite())
            return false;
    return true;
}

std::vector<Rational> TropVector::finite_values() const
{
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(e.value());
    return out;
}

TropVector TropVector::normalized() const
{
    if (entries_.empty() || !entries_[0].is_finite())
        return *this;
    Rational c = entries_[0].value();
    std::vector<TropScalar> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(e - c);
    return TropVector(std::move(out));
}

bool TropVector::projectively_equal(const TropVector& other) const
{
    if (size() != other.size())
        return false;
    if (support() != other.support())
        return false;
    Subset s = support();
    if (s.empty())
        return true;
    Rational shift = other[s[0]].value() - entries_[s[0]].value();
    for (int k : s)
        if (other[k].value() - entries_[k].value() != shift)
            return false;
    return true;
}

std::string TropVector::to_string() const
{
    std::string out = "(";
    for (std::size_t k = 0; k < entries_.size(); ++k)
    {
        if (k)
            out += ',';
        out += entries_[k].to_string();
    }
    return out + ")";
}

TropMatrix::TropMatrix(int d, int n, std::vector<TropScalar> entries)
    : d_(d), n_(n), entries_(std::move(entries))
{
    if (d < 1 || n < 1)
        throw Error("DIMENSION_MISMATCH", "matrix needs d >= 1 and n >= 1");
    if (d > kMaxGround || n > kMaxGround)
        throw Error("DIMENSION_MISMATCH", "matrix dimensions exceed supported range");
    if (entries_.size() != static_cast<std::size_t>(d) * n)
        throw Error("DIMENSION_MISMATCH", "entry count does not match d*n");
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows)
{
    if (rows.empty())
        throw Error("DIMENSION_MISMATCH", "matrix needs at least one row");
    const std::size_t n = rows[0].size();
    std::vector<TropScalar> e;
    for (const auto& r : rows)
    {
        if (r.size() != n)
            throw Error("DIMENSION_MISMATCH", "ragged matrix rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return TropMatrix(static_cast<int>(rows.size()), static_cast<int>(n), std::move(e));
}

TropMatrix TropMatrix::checked(const std::vector<std::vector<TropScalar>>& rows)
{
    TropMatrix a = from_rows(rows);
    a.require_no_empty_column();
    return a;
}

TropMatrix TropMatrix::zero(int d, int n)
{
    return TropMatrix(d, n, std::vector<TropScalar>(static_cast<std::size_t>(d) * n, TropScalar(0)));
}

TropMatrix TropMatrix::on_support(const BipartiteGraph& g, const std::vector<Rational>& values)
{
    if (values.size() != g.size())
        throw Error("DIMENSION_MISMATCH", "one value per support edge expected");
    std::vector<TropScalar> e(static_cast<std::size_t>(g.d()) * g.n());
    for (std::size_t k = 0; k < g.size(); ++k)
    {
        auto [i, j] = g.edges()[k];
        e[static_cast<std::size_t>(i) * g.n() + j] = TropScalar(values[k]);
    }
    return TropMatrix(g.d(), g.n(), std::move(e));
}

std::vector<TropScalar> TropMatrix::row(int i) const
{
    return std::vector<TropScalar>(entries_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                                   entries_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
}

BipartiteGraph TropMatrix::support() const
{
    std::vector<Edge> e;
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j).is_finite())
                e.emplace_back(i, j);
    return BipartiteGraph(d_, n_, std::move(e));
}

void TropMatrix::require_no_empty_column() const
{
    for (int j = 0; j < n_; ++j)
    {
        bool any = false;
        for (int i = 0; i < d_ && !any; ++i)
            any = at(i, j).is_finite();
        if (!any)
            throw Error("EMPTY_COLUMN", "column " + std::to_string(j + 1) + " has empty support");
    }
}

void TropMatrix::require_no_empty_row() const
{
    for (int i = 0; i < d_; ++i)
    {
        bool any = false;
        for (int j = 0; j < n_ && !any; ++j)
            any = at(i, j).is_finite();
        if (!any)
            throw Error("EMPTY_ROW", "row " + std::to_string(i + 1) + " has empty support");
    }
}

TropMatrix TropMatrix::submatrix(const Subset& rows, const Subset& cols) const
{
    std::vector<TropScalar> e;
    for (int i : rows)
        for (int j : cols)
            e.push_back(at(i, j));
    return TropMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(e));
}

TropMatrix TropMatrix::transposed() const
{
    std::vector<TropScalar> e;
    e.reserve(entries_.size());
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < d_; ++i)
            e.push_back(at(i, j));
    return TropMatrix(n_, d_, std::move(e));
}

TropMatrix TropMatrix::add_row_constants(const std::vector<Rational>& c) const
{
    if (static_cast<int>(c.size()) != d_)
        throw Error("DIMENSION_MISMATCH", "one constant per row expected");
    std::vector<TropScalar> e = entries_;
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < n_; ++j)
            e[static_cast<std::size_t>(i) * n_ + j] = at(i, j) + TropScalar(c[i]);
    return TropMatrix(d_, n_, std::move(e));
}

TropMatrix TropMatrix::add_column_constants(const std::vector<Rational>& c) const
{
    if (static_cast<int>(c.size()) != n_)
        throw Error("DIMENSION_MISMATCH", "one constant per column expected");
    std::vector<TropScalar> e = entries_;
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < n_; ++j)
            e[static_cast<std::size_t>(i) * n_ + j] = at(i, j) + TropScalar(c[j]);
    return TropMatrix(d_, n_, std::move(e));
}

std::string TropMatrix::to_string() const
{
    std::string out = "[";
    for (int i = 0; i < d_; ++i)
    {
        if (i)
            out += ";";
        for (int j = 0; j < n_; ++j)
            out += (j ? "," : "") + at(i, j).to_string();
    }
    return out + "]";
}

TropVector vec_mat_mul(const TropVector& x, const TropMatrix& a)
{
    if (static_cast<int>(x.size()) != a.d())
        throw Error("DIMENSION_MISMATCH", "vector length must equal the row count");
    std::vector<TropScalar> out(a.n());
    for (int j = 0; j < a.n(); ++j)
        for (int i = 0; i < a.d(); ++i)
            out[j] = oplus(out[j], x[i] + a.at(i, j));
    return TropVector(std::move(out));
}

TropVector residuation(const TropVector& y, const TropMatrix& a)
{
    if (static_cast<int>(y.size()) != a.n())
        throw Error("DIMENSION_MISMATCH", "vector length must equal the column count");
    if (!y.all_finite())
        throw Error("PRECONDITION", "residuation needs a finite vector");
    a.require_no_empty_row();
    std::vector<TropScalar> out(a.d());
    for (int i = 0; i < a.d(); ++i)
    {
        bool first = true;
        Rational best;
        for (int j = 0; j < a.n(); ++j)
        {
            if (!a.at(i, j).is_finite())
                continue;
            Rational v = y[j].value() - a.at(i, j).value();
            if (first || v > best)
                best = v;
            first = false;
        }
        out[i] = TropScalar(best);
    }
    return TropVector(std::move(out));
}

bool equal_up_to_row_constants(const TropMatrix& a, const TropMatrix& b)
{
    if (a.d() != b.d() || a.n() != b.n())
        return false;
    if (a.support() != b.support())
        return false;
    for (int i = 0; i < a.d(); ++i)
    {
        bool have = false;
        Rational shift;
        for (int j = 0; j < a.n(); ++j)
        {
            if (!a.at(i, j).is_finite())
                continue;
            Rational s = b.at(i, j).value() - a.at(i, j).value();
            if (have && s != shift)
                return false;
            shift = s;
            have = true;
        }
    }
    return true;
}

}   // namespace stiefel
