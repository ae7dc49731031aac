#pragma once

#include <string>

#include <json.hpp>

#include "homtaylor/homfun.hpp"
#include "homtaylor/riskagg.hpp"
#include "homtaylor/symtensor.hpp"
#include "homtaylor/taylor.hpp"

namespace homtaylor {

nlohmann::json to_json(const SymmetricTensor& t);

nlohmann::json to_json(const TaylorReport& report);

nlohmann::json to_json(const AllocationReport& report);

nlohmann::json to_json(const QuadraticIdentityReport& report);

nlohmann::json to_json(const FunctionSpec& spec);

/// Parses {"family": ..., "R": [[...]], "alpha": [...], "p": ...,
/// "power": ..., "inner": {...}}; unknown keys are rejected.
FunctionSpec function_spec_from_json(const nlohmann::json& j);

/// Parses {"R": [[...]], "exposures": [...], "labels": [...]}.
Portfolio portfolio_from_json(const nlohmann::json& j);

}  // namespace homtaylor
