#pragma once

#include <json.hpp>

#include "gfrob/frobenius.hpp"
#include "gfrob/groupoid.hpp"
#include "gfrob/module.hpp"
#include "gfrob/poly.hpp"
#include "gfrob/report.hpp"

namespace gfrob::json_io {

using json = nlohmann::json;

// Readers throw ParseError on malformed input; library validation errors
// (NotAGroup, InvalidAction, ...) pass through unchanged.

/// "p/q" string or integer
json to_json(const Rational& r);
Rational rational_from(const json& j);

json to_json(const Vector& v);
Vector vector_from(const json& j);
/// row-major array of rows
json to_json(const Matrix& m);
Matrix matrix_from(const json& j);

/// {"order": n, "table": [[...]]}
json to_json(const FiniteGroup& G);
FiniteGroup group_from(const json& j);

/// {"group": .., "dim": d, "degrees": [..], "action": {"g": matrix}}
json to_json(const GradedModule& H);
GradedModule module_from(const json& j);

/// {"vars": [..], "terms": [{"exp": [..], "coef": "p/q"}]}
json to_json(const MultiPoly& p);
MultiPoly poly_from(const json& j);
/// The variable order stored in the file, which need not be sorted.
std::vector<std::string> poly_vars(const json& j);

/// {"n": k, "terms": [{"index": [..], "coef": "p/q"}]}
json to_json(const TensorElement& t);
TensorElement tensor_from(const json& j);

json to_json(const StructureConstants& c);
StructureConstants structure_from(const json& j);

json to_json(const GroupoidArrow& a);
json to_json(const Component& c);

/// {"module", "metric", "mult", "unit"}
json to_json(const GFrobeniusAlgebra& A);
GFrobeniusAlgebra algebra_from(const json& j);

/// {"coords", "metric", "potential"}
FrobeniusManifold manifold_from(const json& j);
json to_json(const FrobeniusManifold& F);

/// [{"name", "status", "witness"}]
json to_json(const Report& r);

}  // namespace gfrob::json_io
