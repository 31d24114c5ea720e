#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "cyclab/algebra.hpp"
#include "cyclab/cech.hpp"
#include "cyclab/complex.hpp"
#include "cyclab/lie.hpp"

namespace cyclab {

using Json = nlohmann::json;

/// Parses JSON text; ParseError names `source` and the byte offset.
Json parse_json(std::string_view text, const std::string& source = "<input>");
/// Reads and parses a file; ParseError when unreadable or malformed.
Json read_json_file(const std::string& path);
/// Canonical text form: two-space indent, trailing newline.
std::string dump_json(const Json& j);

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j, const std::string& where);

/// {"dims": {"0": d0, ...}, "differentials": {"1": [[r, c, num, den], ...]}, "bounded": b}
Json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

/// {"dim": n, "basis": [...], "mult": [[i, j, k, num, den], ...], "unit": [...] | null}
/// Unit coordinates are integers or "p/q" strings.
Json to_json(const Algebra& a);
/// ParseError on malformed data, InvariantViolation when not associative or the unit is false.
Algebra algebra_from_json(const Json& j);

/// {"dim": n, "basis": [...], "bracket": [[i, j, k, num, den], ...]}
Json to_json(const LieAlgebra& g);
/// InvariantViolation when the bracket is not antisymmetric or fails Jacobi.
LieAlgebra lie_from_json(const Json& j);

/// {"points": n, "opens": [[...]], "cover": [ids],
///  "precosheaf": {"dims": {"id": d, ...}, "extensions": [[from, to, [[r, c, num, den], ...]], ...]}}
/// Extensions may list only covering inclusions; the rest are composed.
Json to_json(const FinitePrecosheaf& p);
CoverModel cover_from_json(const Json& j);
FinitePrecosheaf precosheaf_from_json(const Json& j);

}  // namespace cyclab
