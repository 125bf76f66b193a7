// Command-line front end. Results go to stdout (or --output) as JSON; errors
// are JSON objects {"error": {"code", "message"}} with exit status 1 for
// domain errors and 2 for usage errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "stiefel/arrangement.hpp"
#include "stiefel/bipartite.hpp"
#include "stiefel/error.hpp"
#include "stiefel/io.hpp"
#include "stiefel/linspace.hpp"
#include "stiefel/plucker.hpp"
#include "stiefel/random.hpp"
#include "stiefel/subdivision.hpp"
#include "svg.hpp"

using namespace stiefel;

namespace {

/** Bad flags or unreadable input: exit status 2. */
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string input = "-";
    std::string vector;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::size_t budget = 100000;

    // gen
    int d = 0;
    int n = 0;
    std::string mode = "dense";
    long lo = 0;
    long hi = 9;
};

std::string slurp(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Json parse(const std::string& text, const std::string& what)
{
    try
    {
        return Json::parse(text);
    }
    catch (const Json::exception& e)
    {
        throw UsageError(what + " is not valid JSON: " + e.what());
    }
}

Json read_input(const Options& o) { return parse(slurp(o.input), "input"); }

/** --vector is inline JSON or a file; {"entries": [...]} or a bare list. */
TropVector read_vector(const Options& o)
{
    if (o.vector.empty())
        throw UsageError("this command needs --vector");
    char first = o.vector.find_first_not_of(" \t\n") == std::string::npos
                     ? ' '
                     : o.vector[o.vector.find_first_not_of(" \t\n")];
    Json j = first == '{' || first == '[' ? parse(o.vector, "--vector") : parse(slurp(o.vector), "--vector");
    if (j.is_object())
    {
        if (!j.contains("entries"))
            throw Error("PARSE", "vector object needs \"entries\"");
        return vector_from_json(j["entries"]);
    }
    return vector_from_json(j);
}

/** A matrix, or {"d", "n", "edges": [[i, j], ...]} with 1-based edges. */
BipartiteGraph read_graph(const Json& j)
{
    if (j.is_object() && j.contains("edges"))
    {
        if (!j.contains("d") || !j.contains("n"))
            throw Error("PARSE", "graph object needs \"d\" and \"n\"");
        return graph_from_json(j["edges"], j["d"].get<int>(), j["n"].get<int>());
    }
    return matrix_from_json(j).support();
}

void emit(const Options& o, const std::string& text)
{
    if (o.output.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out)
        throw UsageError("cannot write " + o.output);
    out << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

bool wants_svg(const Options& o)
{
    if (o.format == "svg")
        return true;
    if (o.format != "json")
        throw UsageError("--format must be json or svg");
    return false;
}

Json plucker_output(const PluckerVector& p)
{
    return Json{{"d", p.d()}, {"n", p.n()}, {"plucker", plucker_to_json(p)}};
}

Json matroid_list(const std::vector<Matroid>& ms)
{
    Json out = Json::array();
    for (const auto& m : ms)
        out.push_back(matroid_to_json(m));
    return out;
}

void run(const std::string& command, const Options& o)
{
    if (command == "gen")
    {
        emit_json(o, matrix_to_json(gen_matrix(o.d, o.n, parse_gen_mode(o.mode), o.seed, o.lo, o.hi)));
        return;
    }

    Json in = read_input(o);
    if (command == "stiefel")
    {
        emit_json(o, plucker_output(stiefel_map(matrix_from_json(in))));
    }
    else if (command == "plucker-check")
    {
        PluckerVector p = plucker_from_json(in);
        emit_json(o, Json{{"is_plucker", check_plucker(p)}});
    }
    else if (command == "multifield")
    {
        TropMatrix a = matrix_from_json(in);
        emit_json(o, Json{{"d", a.d()}, {"n", a.n()}, {"multifield", multifield_to_json(matching_multifield(a))}});
    }
    else if (command == "coherent")
    {
        if (!in.is_object() || !in.contains("d") || !in.contains("n") || !in.contains("multifield"))
            throw Error("PARSE", "expected {\"d\", \"n\", \"multifield\"}");
        auto lambda = multifield_from_json(in["multifield"], in["d"].get<int>(), in["n"].get<int>());
        auto witness = is_coherent(lambda);
        Json out{{"coherent", witness.has_value()}};
        if (witness)
            out["witness"] = matrix_to_json(*witness);
        emit_json(o, out);
    }
    else if (command == "support-set")
    {
        BipartiteGraph g = read_graph(in);
        bool yes = is_support_set(g);
        Json out{{"is_support_set", yes}};
        out["h1"] = yes ? Json(support_face_dimension(g)) : Json(nullptr);
        emit_json(o, out);
    }
    else if (command == "covectors" || command == "render")
    {
        ArrangementComplex tc = enumerate_covectors(matrix_from_json(in), o.budget);
        if (command == "render" || wants_svg(o))
            emit(o, svg::arrangement(tc));
        else
            emit_json(o, complex_to_json(tc));
    }
    else if (command == "facets")
    {
        emit_json(o, matroid_list(facets_of_D(matrix_from_json(in), o.budget)));
    }
    else if (command == "member")
    {
        PluckerVector p = stiefel_map(matrix_from_json(in));
        emit_json(o, Json{{"in_L", contains(p, read_vector(o))}});
    }
    else if (command == "decompose")
    {
        TropMatrix a = matrix_from_json(in);
        auto cert = decompose(a, read_vector(o), o.budget);
        Json out{{"in_L", cert.has_value()}};
        if (cert)
            out["certificate"] = certificate_to_json(*cert);
        emit_json(o, out);
    }
    else if (command == "bounded")
    {
        TropMatrix a = matrix_from_json(in);
        if (wants_svg(o))
        {
            std::vector<Matroid> facets;
            auto tree = bounded_tree(stiefel_map(a), &facets);
            emit(o, svg::tree(tree, facets));
        }
        else if (!o.vector.empty())
        {
            PluckerVector p = stiefel_map(a);
            TropVector y = read_vector(o);
            emit_json(o, Json{{"in_L", contains(p, y)}, {"bounded", bounded_membership(p, y)}});
        }
        else
        {
            Json cells = Json::array();
            for (const auto& c : bounded_complex(a, o.budget))
                cells.push_back(Json{{"covector", covector_to_json(c.covector)},
                                     {"dim", c.dimension},
                                     {"point", vector_to_json(c.image_point.normalized())}});
            emit_json(o, cells);
        }
    }
    else if (command == "recover")
    {
        if (!in.is_object() || !in.contains("support"))
            throw Error("PARSE", "expected a Plücker vector with \"support\"");
        PluckerVector p = plucker_from_json(in);
        BipartiteGraph sigma = graph_from_json(in["support"], p.d(), p.n());
        emit_json(o, matrix_to_json(recover_matrix(p, sigma)));
    }
    else
    {
        throw UsageError("unknown command " + command);
    }
}

int fail(const std::string& code, const std::string& message, int status)
{
    std::cout << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
    return status;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact tropical Stiefel maps, matroid subdivisions and linear spaces"};
    app.require_subcommand(1);
    Options o;

    struct Spec
    {
        const char* name;
        const char* help;
        bool vector;
        bool format;
    };
    const Spec specs[] = {
        {"stiefel", "tropical maximal minors of a matrix", false, false},
        {"plucker-check", "three-term Plücker relations", false, false},
        {"multifield", "optimal matchings per column set", false, false},
        {"coherent", "coherence of a matching multifield, with a witness matrix", false, false},
        {"support-set", "support set test and first Betti number", false, false},
        {"covectors", "cells of the arrangement of a matrix", false, true},
        {"facets", "facet matroids of the transversal subdivision", false, false},
        {"member", "membership in the Stiefel linear space", true, false},
        {"decompose", "membership certificate for the Stiefel linear space", true, false},
        {"bounded", "bounded part of the linear space (cells, a point test, or a tree drawing)", true, true},
        {"recover", "matrix from a Plücker vector and a support set", false, false},
        {"render", "SVG drawing of the arrangement (d <= 3)", false, false},
    };
    for (const auto& s : specs)
    {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--input,-i", o.input, "input JSON file, or - for stdin");
        sub->add_option("--output,-o", o.output, "write the result here instead of stdout");
        sub->add_option("--budget", o.budget, "cap on enumerated cells");
        sub->add_option("--seed", o.seed, "unused; accepted for uniformity");
        if (s.vector)
            sub->add_option("--vector,-v", o.vector, "vector JSON, inline or a file");
        if (s.format)
            sub->add_option("--format", o.format, "json or svg");
    }
    CLI::App* gen = app.add_subcommand("gen", "seeded random matrix");
    gen->add_option("--d", o.d, "rows")->required();
    gen->add_option("--n", o.n, "columns")->required();
    gen->add_option("--seed", o.seed, "random seed")->required();
    gen->add_option("--mode", o.mode, "dense, support-set or pointed");
    gen->add_option("--lo", o.lo, "smallest entry");
    gen->add_option("--hi", o.hi, "largest entry");
    gen->add_option("--output,-o", o.output, "write the result here instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        run(app.get_subcommands().front()->get_name(), o);
    }
    catch (const UsageError& e)
    {
        return fail("USAGE", e.what(), 2);
    }
    catch (const Error& e)
    {
        return fail(e.code(), e.what(), e.code() == "PARSE" ? 2 : 1);
    }
    catch (const Json::exception& e)
    {
        return fail("PARSE", e.what(), 2);
    }
    return 0;
}
