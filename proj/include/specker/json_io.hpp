#pragma once

#include <json.hpp>

#include "specker/finebridge.hpp"
#include "specker/inequalities.hpp"
#include "specker/ontmodel.hpp"
#include "specker/polytope.hpp"

namespace specker {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rationals serialize as canonical "p/q" strings.
Json rational_to_json(const Rat& r);
/// Accepts "p/q" strings, integers, and floats (floats snapped to a fraction
/// with denominator <= 10^6 within 1e-9, else rejected).
Rat rational_from_json(const Json& j, const std::string& where);

Json to_json(const CorrelationVector& cv);
Json to_json(const SixParams& s);
Json to_json(const ValidationReport& report);
Json to_json(const RValues& r);
Json to_json(const Vertex& v);
Json to_json(const ConvexDecomposition& d);
Json to_json(const MarginalScenario& sc);
Json to_json(const ScenarioStats& stats);
Json to_json(const JointDistribution& joint, const MarginalScenario& sc);
Json to_json(const FiniteOntologicalModel& model);

/// Accepts {"pairs": {...}} or {"six": {...}}.
CorrelationVector correlation_from_json(const Json& j);
SixParams six_from_json(const Json& j);

MarginalScenario scenario_from_json(const Json& j);
ScenarioStats stats_from_json(const Json& j, const MarginalScenario& sc);
FiniteOntologicalModel model_from_json(const Json& j);

}  // namespace specker
