#pragma once

#include <string>

#include <json.hpp>

#include "lazard/bch.hpp"
#include "lazard/cohomology.hpp"
#include "lazard/lhs.hpp"
#include "lazard/liecore.hpp"

namespace lazard {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Structure-constant document: {"schema": 1, "name", "p", "k", "rank",
/// "brackets": [{"i", "j", "m", "c"} | [i, j, m, c], ...]} with 1-based
/// indices and i < j. The parsed algebra is checked against Jacobi.
LieAlgebra parse_algebra(const std::string& text);
LieAlgebra parse_algebra(const Json& doc);
inline LieAlgebra parse_algebra(const char* text) { return parse_algebra(std::string(text)); }
Json algebra_to_json(const LieAlgebra& g);
std::string emit_algebra(const LieAlgebra& g);

/// Module document: {"schema": 1, "p", "dim", "action": [matrix per basis
/// vector]}; matrices are lists of rows.
LieModule parse_module(const std::string& text, const PrimeContext& field);

/// Chain document: {"schema": 1, "ideals": [[row, ...], ...]}, each ideal a
/// list of generating vectors in ambient coordinates.
FiltrationChain parse_chain(const std::string& text, const LieAlgebra& g);

std::string read_file(const std::string& path);

Json to_json(const std::vector<Index>& v);
Json bch_to_json(const BchTable& table);
Json comparison_to_json(const ComparisonReport& report, const LieAlgebra& g);
Json integral_to_json(const std::vector<IntegralCohomology>& h);
std::string dump(const Json& doc);

}  // namespace lazard
