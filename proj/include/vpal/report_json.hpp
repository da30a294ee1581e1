#pragma once

#include <json.hpp>
#include <string>

#include "vpal/indicator.hpp"

namespace vpal {

/// JSON form of an analysis. Every integer is a decimal string; keys are
/// emitted in sorted order, so dump() output is canonical.
nlohmann::json to_json(const AnalysisReport& report);

nlohmann::json to_json(const IndicatorCombination& comb);
nlohmann::json to_json(const Factorization& f);

/// to_json(report).dump(2).
std::string render_json(const AnalysisReport& report);

}  // namespace vpal
