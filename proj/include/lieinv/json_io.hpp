#ifndef LIEINV_JSON_IO_HPP
#define LIEINV_JSON_IO_HPP

#include "lieinv/classical.hpp"
#include "lieinv/classify.hpp"
#include "lieinv/contraction.hpp"

#include <json.hpp>

namespace lieinv {

using Json = nlohmann::ordered_json;

/// Algebra file schema:
/// { "name": str, "dim": int, "kind": "lie"|"jordan"|"raw", "basis": [str...],
///   "parameters": {name: scalar-text}, "brackets": [[label,label,expr]...] }
StructureConstants algebra_from_json(const Json& j);
StructureConstants load_algebra_file(const std::string& path);
StructureConstants algebra_from_string(const std::string& text);

Json algebra_to_json(const StructureConstants& sc);

/// Graded setup schema:
/// { "group": [m1] or [m1,m2], "grades": [[g1,g2]... one per basis vector],
///   "epsilon": [[[g1,g2],[h1,h2],"value"]...] } (symmetric completion,
/// missing pairs are zero).
GradedSetup graded_setup_from_json(const Json& j, int dim);
GradedSetup load_graded_setup_file(const std::string& path, int dim);

/// U-matrix schema: { "u": [[entry...]...] } with entries rational-function
/// texts in the contraction parameter ("eps").
Matrix<RatFunc> umatrix_from_json(const Json& j, int dim);
Matrix<RatFunc> load_umatrix_file(const std::string& path, int dim);

Json invariant_function_to_json(const InvariantFunction& f);
Json inv_tuple_to_json(const InvTuple& t);
Json identification_to_json(const IdentificationResult& r);
Json verdict_to_json(const ContractionVerdict& v);
Json validation_to_json(const ValidationReport& rep);

} // namespace lieinv

#endif
