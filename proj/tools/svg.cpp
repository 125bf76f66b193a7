#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stiefel/error.hpp"
#include "stiefel/geom.hpp"

namespace stiefel::svg {

namespace {

constexpr double kSize = 480;
constexpr double kPad = 40;

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

/** Maps the plotted coordinates of a gauge-fixed point into the picture. */
struct Frame
{
    int d;
    Rational lo, hi;

    double coord(const Rational& v) const
    {
        return kPad + Rational(v - lo).get_d() / Rational(hi - lo).get_d() * (kSize - 2 * kPad);
    }
    double px(const RVec& x) const { return coord(x[1]); }
    double py(const RVec& x) const { return d >= 3 ? kSize - coord(x[2]) : kSize / 2; }
};

Polyhedron box(int d, const Rational& lo, const Rational& hi)
{
    Polyhedron b(d);
    for (int k = 1; k < d; ++k)
    {
        RVec e(d, Rational(0));
        e[k] = 1;
        b.add_inequality(e, lo);
        b.add_upper(e, hi);
    }
    return b;
}

}   // namespace

std::string arrangement(const ArrangementComplex& tc)
{
    const int d = tc.matrix().d();
    if (d > 3)
        throw Error("PRECONDITION", "arrangement drawings need d <= 3");

    Rational lo = -1, hi = 1;
    for (const auto& c : tc.cells())
    {
        if (c.dimension != 0)
            continue;
        for (int k = 1; k < d; ++k)
        {
            lo = std::min(lo, c.interior_point[k]);
            hi = std::max(hi, c.interior_point[k]);
        }
    }
    Rational margin = std::max(Rational(1), Rational((hi - lo) / 3));
    lo -= margin;
    hi += margin;
    Frame frame{d, lo, hi};
    Polyhedron clip = box(d, lo, hi);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Edges first, clipped to the box; a generic functional finds their endpoints.
    RVec along(d, Rational(0));
    for (int k = 1; k < d; ++k)
        along[k] = 2 * k + 1;
    for (const auto& c : tc.cells())
    {
        if (c.dimension != 1)
            continue;
        LinearConstraintSystem sys = c.polyhedron.intersect(clip).as_system();
        RVec back(along);
        for (auto& v : back)
            v = -v;
        LpResult hi_end = lp_maximize(sys, along);
        LpResult lo_end = lp_maximize(sys, back);
        if (hi_end.status != LpStatus::Optimal || lo_end.status != LpStatus::Optimal)
            continue;
        out << "<line x1=\"" << frame.px(lo_end.point) << "\" y1=\"" << frame.py(lo_end.point) << "\" x2=\""
            << frame.px(hi_end.point) << "\" y2=\"" << frame.py(hi_end.point)
            << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& c : tc.cells())
    {
        if (c.dimension > 0 && c.dimension < d - 1)
            continue;
        auto at = relative_interior_point(c.polyhedron.intersect(clip));
        if (!at)
            continue;
        std::string label = escape(c.covector.tuple_string());
        if (c.dimension == 0)
        {
            out << "<circle cx=\"" << frame.px(*at) << "\" cy=\"" << frame.py(*at) << "\" r=\"3\" fill=\"black\"/>\n";
            out << "<text x=\"" << frame.px(*at) + 5 << "\" y=\"" << frame.py(*at) - 5
                << "\" font-size=\"9\" fill=\"darkred\">" << label << "</text>\n";
        }
        else
        {
            out << "<text x=\"" << frame.px(*at) << "\" y=\"" << frame.py(*at)
                << "\" font-size=\"9\" fill=\"navy\" text-anchor=\"middle\">" << label << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string tree(const std::vector<std::vector<int>>& adjacency, const std::vector<Matroid>& facets)
{
    const std::size_t k = adjacency.size();
    std::vector<double> x(k), y(k);
    for (std::size_t v = 0; v < k; ++v)
    {
        double angle = 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(std::max<std::size_t>(k, 1));
        double radius = k > 1 ? kSize / 2 - 2 * kPad : 0;
        x[v] = kSize / 2 + radius * std::cos(angle);
        y[v] = kSize / 2 + radius * std::sin(angle);
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t u = 0; u < k; ++u)
        for (int v : adjacency[u])
            if (static_cast<std::size_t>(v) > u)
                out << "<line x1=\"" << x[u] << "\" y1=\"" << y[u] << "\" x2=\"" << x[v] << "\" y2=\"" << y[v]
                    << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (std::size_t v = 0; v < k; ++v)
    {
        out << "<g><title>" << escape(facets[v].to_string()) << "</title>";
        out << "<circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"12\" fill=\"lightsteelblue\" stroke=\"black\"/>";
        out << "<text x=\"" << x[v] << "\" y=\"" << y[v] + 4
            << "\" font-size=\"11\" text-anchor=\"middle\">" << v + 1 << "</text></g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}   // namespace stiefel::svg
