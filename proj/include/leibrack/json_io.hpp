#pragma once

#include "leibrack/cohomology.hpp"
#include "leibrack/rack_series.hpp"
#include "leibrack/reconstruction.hpp"

#include <json.hpp>

#include <string>

namespace leibrack {

using Json = nlohmann::json;

// Rationals are strings "p/q" or "p". All indices are 0-based.
// Malformed documents raise Error(Input).

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t dim);

/// { "dim", "basis", "c": c[i][j][k] }
Json to_json(const LeibnizAlgebra& alg);
/// Object form, or a string naming a builtin.
LeibnizAlgebra algebra_from_json(const Json& j);

/// { "n", "dim", "entries": [{ "mu", "j", "k", "v" }] }, zero entries omitted.
Json to_json(const PartSymMap& a);
PartSymMap partsym_from_json(const Json& j);

/// { "p", "dim", "vector": bool, "entries": [{ "mu", "k", "v" }] }
Json to_json(const SymForm& f);
SymForm symform_from_json(const Json& j);

/// { "n", "dim", "entries": [{ "tuple", "k", "v" }] }
Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j);

/// { "algebra", "N", "A": [A_1..A_N] }
Json to_json(const RackSeries& s);
RackSeries series_from_json(const Json& j);

Json to_json(const BList& b);
BList blist_from_json(const Json& j);

Json read_json_file(const std::string& path);

/// "builtin:NAME" or "@file.json".
LeibnizAlgebra load_algebra(const std::string& spec);
RackSeries load_series(const std::string& spec);

}  // namespace leibrack
