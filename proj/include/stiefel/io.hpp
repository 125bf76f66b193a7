/**
 * JSON encodings. Scalars are written as strings ("3", "-1/2", "inf") and
 * read from integers or strings. Indices are 1-based.
 */

#ifndef STIEFEL_IO_HPP
#define STIEFEL_IO_HPP

#include <json.hpp>

#include "stiefel/arrangement.hpp"
#include "stiefel/bipartite.hpp"
#include "stiefel/linspace.hpp"
#include "stiefel/matroid.hpp"
#include "stiefel/plucker.hpp"
#include "stiefel/trop.hpp"

namespace stiefel {

using Json = nlohmann::json;

Json scalar_to_json(const TropScalar& s);
TropScalar scalar_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/** {"d": d, "n": n, "entries": [[...], ...]} */
Json matrix_to_json(const TropMatrix& a);
TropMatrix matrix_from_json(const Json& j);

/** {"entries": [...]} */
Json vector_to_json(const TropVector& v);
TropVector vector_from_json(const Json& j);

Json rvec_to_json(const RVec& v);

Json subset_to_json(const Subset& s);

/** [[i, j], ...] */
Json graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const Json& j, int d, int n);

/** (I_1, ..., I_n) as [[rows of column 1], ...]. */
Json covector_to_json(const Covector& tau);
Covector covector_from_json(const Json& j, int d);

/** {"1,2": "0", ...} */
Json plucker_to_json(const PluckerVector& p);

/**
 * Reads either a bare subset map or {"d", "n", "plucker": map}. For a bare
 * map, n is the largest element mentioned.
 */
PluckerVector plucker_from_json(const Json& j);

/** [[1,2], [1,3], ...] */
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j, int n, int rank);

/** A matching as its column list [c_1, ..., c_d]. */
Json matching_to_json(const Matching& m);

/** {"1,2": [[1,2], ...], ...} */
Json multifield_to_json(const MatchingMultifield& lambda);
MatchingMultifield multifield_from_json(const Json& j, int d, int n);

/** [{"covector": ..., "dim": k}, ...] */
Json complex_to_json(const ArrangementComplex& tc);

Json certificate_to_json(const DecompositionCertificate& cert);

}   // namespace stiefel

#endif
