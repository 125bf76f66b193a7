#include "stiefel/io.hpp"

#include "stiefel/error.hpp"

namespace stiefel {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error("PARSE", std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int index_from_json(const Json& j, int limit, const char* what)
{
    if (!j.is_number_integer())
        throw Error("PARSE", std::string(what) + " must be an integer");
    int v = j.get<int>();
    if (v < 1 || v > limit)
        throw Error("PARSE", std::string(what) + " out of range");
    return v - 1;
}

int size_from_json(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > kMaxGround)
        throw Error("PARSE", std::string("\"") + key + "\" must be an integer in [0, 31]");
    return v.get<int>();
}

}   // namespace

Json scalar_to_json(const TropScalar& s)
{
    return s.to_string();
}

TropScalar scalar_from_json(const Json& j)
{
    if (j.is_number_integer())
        return TropScalar(Rational(j.get<long>()));
    if (j.is_string())
        return TropScalar::parse(j.get<std::string>());
    throw Error("PARSE", "a scalar must be an integer or a string");
}

Json rational_to_json(const Rational& q)
{
    return format_rational(q);
}

Rational rational_from_json(const Json& j)
{
    TropScalar s = scalar_from_json(j);
    if (s.is_infinite())
        throw Error("PARSE", "expected a finite rational");
    return s.value();
}

Json matrix_to_json(const TropMatrix& a)
{
    Json rows = Json::array();
    for (int i = 0; i < a.d(); ++i)
    {
        Json row = Json::array();
        for (int j = 0; j < a.n(); ++j)
            row.push_back(scalar_to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"d", a.d()}, {"n", a.n()}, {"entries", std::move(rows)}};
}

TropMatrix matrix_from_json(const Json& j)
{
    const int d = size_from_json(j, "d");
    const int n = size_from_json(j, "n");
    const Json& rows = field(j, "entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
        throw Error("PARSE", "\"entries\" must hold d rows");
    std::vector<TropScalar> e;
    for (const auto& row : rows)
    {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error("PARSE", "every row must hold n entries");
        for (const auto& x : row)
            e.push_back(scalar_from_json(x));
    }
    return TropMatrix(d, n, std::move(e));
}

Json vector_to_json(const TropVector& v)
{
    Json e = Json::array();
    for (const auto& x : v.entries())
        e.push_back(scalar_to_json(x));
    return Json{{"entries", std::move(e)}};
}

TropVector vector_from_json(const Json& j)
{
    const Json& e = j.is_array() ? j : field(j, "entries");
    if (!e.is_array())
        throw Error("PARSE", "\"entries\" must be a list");
    std::vector<TropScalar> v;
    for (const auto& x : e)
        v.push_back(scalar_from_json(x));
    return TropVector(std::move(v));
}

Json rvec_to_json(const RVec& v)
{
    Json e = Json::array();
    for (const auto& x : v)
        e.push_back(rational_to_json(x));
    return e;
}

Json subset_to_json(const Subset& s)
{
    Json e = Json::array();
    for (int x : s)
        e.push_back(x + 1);
    return e;
}

Json graph_to_json(const BipartiteGraph& g)
{
    Json e = Json::array();
    for (const auto& [i, j] : g.edges())
        e.push_back(Json::array({i + 1, j + 1}));
    return e;
}

BipartiteGraph graph_from_json(const Json& j, int d, int n)
{
    if (!j.is_array())
        throw Error("PARSE", "a graph must be a list of [row, column] pairs");
    std::vector<Edge> edges;
    for (const auto& e : j)
    {
        if (!e.is_array() || e.size() != 2)
            throw Error("PARSE", "an edge must be a [row, column] pair");
        edges.emplace_back(index_from_json(e[0], d, "row"), index_from_json(e[1], n, "column"));
    }
    return BipartiteGraph(d, n, std::move(edges));
}

Json covector_to_json(const Covector& tau)
{
    Json out = Json::array();
    for (int j = 0; j < tau.n(); ++j)
        out.push_back(subset_to_json(subset_of(tau.col_neighbors(j))));
    return out;
}

Covector covector_from_json(const Json& j, int d)
{
    if (!j.is_array())
        throw Error("PARSE", "a covector must be a list of row lists");
    const int n = static_cast<int>(j.size());
    std::vector<Edge> edges;
    for (int c = 0; c < n; ++c)
    {
        if (!j[c].is_array())
            throw Error("PARSE", "a covector entry must be a list of rows");
        for (const auto& r : j[c])
            edges.emplace_back(index_from_json(r, d, "row"), c);
    }
    return Covector(d, n, std::move(edges));
}

Json plucker_to_json(const PluckerVector& p)
{
    Json out = Json::object();
    auto subs = p.subsets();
    for (std::size_t k = 0; k < subs.size(); ++k)
        out[format_subset(subs[k])] = scalar_to_json(p.values()[k]);
    return out;
}

PluckerVector plucker_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error("PARSE", "a Plücker vector must be a JSON object");
    const Json* map = &j;
    int d = -1, n = -1;
    if (j.contains("plucker"))
    {
        d = size_from_json(j, "d");
        n = size_from_json(j, "n");
        map = &j.at("plucker");
        if (!map->is_object())
            throw Error("PARSE", "\"plucker\" must be an object");
    }
    std::map<Subset, TropScalar> values;
    int max_elem = 0;
    for (auto it = map->begin(); it != map->end(); ++it)
    {
        Subset s = parse_subset(it.key());
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error("PARSE", "subset keys must be strictly increasing");
        if (d < 0 && !values.empty() && static_cast<int>(s.size()) != static_cast<int>(values.begin()->first.size()))
            throw Error("PARSE", "subset keys have different sizes");
        if (!s.empty())
            max_elem = std::max(max_elem, s.back() + 1);
        values[s] = scalar_from_json(it.value());
    }
    if (d < 0)
    {
        if (values.empty())
            throw Error("PARSE", "empty Plücker map");
        d = static_cast<int>(values.begin()->first.size());
        n = max_elem;
    }
    if (max_elem > n)
        throw Error("PARSE", "subset element exceeds n");
    return PluckerVector::from_map(d, n, values);
}

Json matroid_to_json(const Matroid& m)
{
    Json out = Json::array();
    for (const auto& b : m.bases())
        out.push_back(subset_to_json(b));
    return out;
}

Matroid matroid_from_json(const Json& j, int n, int rank)
{
    if (!j.is_array())
        throw Error("PARSE", "a matroid must be a list of bases");
    std::vector<Subset> bases;
    for (const auto& b : j)
    {
        if (!b.is_array())
            throw Error("PARSE", "a basis must be a list");
        Subset s;
        for (const auto& x : b)
            s.push_back(index_from_json(x, n, "element"));
        std::sort(s.begin(), s.end());
        bases.push_back(std::move(s));
    }
    return Matroid(n, rank, bases);
}

Json matching_to_json(const Matching& m)
{
    Json out = Json::array();
    for (int c : m.cols)
        out.push_back(c + 1);
    return out;
}

Json multifield_to_json(const MatchingMultifield& lambda)
{
    Json out = Json::object();
    for (const auto& [j, ms] : lambda.choices())
    {
        Json list = Json::array();
        for (const auto& m : ms)
            list.push_back(matching_to_json(m));
        out[format_subset(j)] = std::move(list);
    }
    return out;
}

MatchingMultifield multifield_from_json(const Json& j, int d, int n)
{
    if (!j.is_object())
        throw Error("PARSE", "a multifield must be an object keyed by column subsets");
    std::map<Subset, std::vector<Matching>> choices;
    for (auto it = j.begin(); it != j.end(); ++it)
    {
        Subset s = parse_subset(it.key());
        std::vector<Matching> ms;
        if (!it.value().is_array())
            throw Error("PARSE", "multifield entries must be lists of matchings");
        for (const auto& m : it.value())
        {
            if (!m.is_array() || static_cast<int>(m.size()) != d)
                throw Error("PARSE", "a matching lists one column per row");
            Matching mm;
            for (const auto& c : m)
                mm.cols.push_back(index_from_json(c, n, "column"));
            ms.push_back(std::move(mm));
        }
        choices[s] = std::move(ms);
    }
    return MatchingMultifield(d, n, std::move(choices));
}

Json complex_to_json(const ArrangementComplex& tc)
{
    Json out = Json::array();
    for (const auto& c : tc.cells())
        out.push_back(Json{{"covector", covector_to_json(c.covector)}, {"dim", c.dimension}});
    return out;
}

Json certificate_to_json(const DecompositionCertificate& cert)
{
    return Json{{"covector", covector_to_json(cert.covector)},
                {"x", rvec_to_json(cert.x)},
                {"J", subset_to_json(cert.j)},
                {"slack", rvec_to_json(cert.slack)}};
}

}   // namespace stiefel
