#pragma once

#include <json.hpp>

#include "insdel/bounds.hpp"
#include "insdel/codes.hpp"
#include "insdel/verify.hpp"

namespace insdel {

// Exact quantities are written as "p/q" strings next to a float rendering, so reports stay
// reproducible byte for byte.

nlohmann::ordered_json rational_json(const Rational& value);
nlohmann::ordered_json word_json(const Word& w);

nlohmann::ordered_json to_json(const Verdict& verdict);
nlohmann::ordered_json to_json(const TheoremReport& report);
nlohmann::ordered_json to_json(const UniqueDecodingReport& report);
nlohmann::ordered_json to_json(const ComparisonReport& report);
nlohmann::ordered_json to_json(const PiecewiseBound& bound);
nlohmann::ordered_json to_json(const RsSearchResult& result);
nlohmann::ordered_json to_json(const CheckSummary& summary);

std::string to_string(CaseOutcome outcome);

}  // namespace insdel
