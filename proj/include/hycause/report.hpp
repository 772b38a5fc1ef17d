#pragma once

#include "hycause/cause_temporal.hpp"
#include "hycause/counterfactual.hpp"
#include "hycause/evaluator.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hycause {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hycause/1";

Json to_json(const ActionTerm& a);
Json to_json(const std::optional<CausePair>& c);
Json to_json(const Scenario& s);
Json to_json(const std::vector<Diagnostic>& diagnostics);
Json to_json(const Replacement& r);

/// Per prefix: timestamp, the action leading into it, interval, discrete
/// state, active contexts and temporal values at both endpoints.
Json timeline_json(const Timeline& tl);

Json verdict_json(const CauseVerdict& v, const Timeline& tl);
Json butfor_json(const ButForReport& r);

}  // namespace hycause
