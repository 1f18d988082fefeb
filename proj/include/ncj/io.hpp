#pragma once

#include <string>

#include "json.hpp"
#include "ncj/derivations.hpp"
#include "ncj/morphisms.hpp"
#include "ncj/superalgebra.hpp"

namespace ncj {

using Json = nlohmann::json;

/// Field selector: either a string ("q", "gf5", "ratfunc:a,t") or an object
/// {"kind": "q"|"gf"|"ratfunc", "p": 5, "vars": ["a","t"]}.
Field field_from_json(const Json& j);
Json field_to_json(const Field& f);

/// Algebra spec:
///   {"field": ..., "dim": n, "parity": [...], "names": [...],
///    "table": [[i, j, [[k, "coeff"], ...]], ...]}
/// Coefficients are integers or literal strings.  Missing pairs are zero.
/// Throws Parse or InvalidArgument on malformed input.
SuperAlgebra algebra_from_json(const Json& j);
SuperAlgebra load_algebra(const std::string& path);
Json algebra_to_json(const SuperAlgebra& a);

/// Rows of coefficient strings.
Json matrix_to_json(const Matrix& m);
Json map_to_json(const LinearMap& m);

/// {"algebra", "dims": [even, odd], "basis": {"even": [...], "odd": [...]},
///  "closure": {"closed", "jacobi", "structure": <algebra>}}
Json derivation_report(const DerivationSpace& d);

Json witness_to_json(const SuperAlgebra& a, const SubalgebraWitness& w);

/// Two-space indented text with a trailing newline; keys come out sorted.
std::string dump(const Json& j);
void write_text(const std::string& path, const std::string& text);

}  // namespace ncj
