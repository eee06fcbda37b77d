#pragma once

// JSON forms of library values. Key order is preserved so that printing a parsed
// document reproduces it byte for byte.

#include "json.hpp"

#include "ultra/polynomial.hpp"

namespace ultra {

using Json = nlohmann::ordered_json;

// {"terms": [[5,"3"],[1,"-2"],[0,"7"]]}, exponents strictly decreasing.
Json poly_to_json(const SparsePoly& f);
SparsePoly poly_from_json(const Json& j);

// Compact single-line dump.
std::string dump(const Json& j);
// Parses text, rethrowing syntax errors as ParseError.
Json parse_json(std::string_view text);

}  // namespace ultra
