#pragma once

#include "lamprime/exact_oracle.hpp"
#include "lamprime/rounding.hpp"
#include "lamprime/sweeps.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lamprime {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings; reading also accepts decimals and plain numbers.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json lp_solution_json(const LpSolution& s);

Json interval_json(const LambdaInterval& iv);
LambdaInterval interval_from_json(const Json& j);

Json cover_json(const CoverFamily& family, bool with_vectors = true);
/// Throws ParseError on missing or malformed fields.
CoverFamily cover_from_json(const Json& j);

Json clustering_family_json(const std::vector<RoundedMember>& family);

/// "lambda_lo,lambda_hi,P,N" header plus one row per piece.
std::string curve_pieces_csv(const PwlCurve& curve);
/// "lambda,value" at every piece endpoint and at `grid` evenly spaced points, sorted.
std::string curve_samples_csv(const PwlCurve& curve, int grid);
/// Assignment list, one entry per piece, with the piece bounds.
Json exact_family_json(const ExactCurve& curve);

Json cover_report_json(const CoverReport& report);

Json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);
/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace lamprime
