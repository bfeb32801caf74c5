#pragma once

#include <string>

#include "json.hpp"

#include "gammafield/compare.hpp"
#include "gammafield/invariants.hpp"

namespace gammafield {

/// Bumped whenever the JSON projection changes; part of every cache key.
inline constexpr int kSchemaVersion = 1;

/// JSON projection of an analysis. Big integers are decimal strings; keys are
/// sorted, so equal analyses serialize to identical bytes.
nlohmann::json to_json(const FieldAnalysis& a);

/// Inverse of to_json. Throws ParseError on malformed documents.
FieldAnalysis analysis_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const SpinorReport& r);
nlohmann::json to_json(const TheoremPrediction& t);
nlohmann::json to_json(const CrossValidation& c);

/// Plain-text table for --human.
std::string render_human(const FieldAnalysis& a);
std::string render_human(const SpinorReport& r, const TheoremPrediction& t);

}  // namespace gammafield
