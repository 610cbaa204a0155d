#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "module.hpp"
#include "twist.hpp"

namespace qci {

using Json = nlohmann::json;

// Parses text into JSON; malformed input raises Err::ParseError instead of
// the library's own exception type.
Json parse_json_text(const std::string& text);

// Algebra interchange: {"p": 5, "c": 2, "a": [2,2], "q": [[1,4],[4,1]]},
// q entries as residues mod p.
Json algebra_to_json(const QciAlgebra& A);
QciAlgebra algebra_from_json(const Json& j);

// Module interchange: {"dim": n, "actions": [matrix per generator],
// "degrees": [[d1..dc] per basis vector]}; degrees absent means ungraded.
Json module_to_json(const Module& m);
Module module_from_json(const QciAlgebra& A, const Json& j);

// Ext table: {"dims": [...], "window": dims.size() - 1}.
Json ext_table_json(const std::vector<std::size_t>& dims);

// Twist values as a c1 x c2 matrix of residues.
Json twist_to_json(const TwistMap& t);
TwistMap twist_from_json(const Json& j);

}  // namespace qci
