#pragma once

#include <json.hpp>

#include "foliate/projective.hpp"
#include "foliate/registry.hpp"
#include "foliate/surface.hpp"

namespace foliate {

using Json = nlohmann::json;

/// Throws InvalidInput when `j` has a key outside `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what);

Json to_json(const OneForm& w);
OneForm form_from_json(const Json& j);

Json to_json(const FoliatedChart& c);
FoliatedChart chart_from_json(const Json& j);

Json to_json(const CenterSpec& c);
CenterSpec center_from_json(const Json& j, const std::string& chart);

Json to_json(const ScriptStep& s);
ScriptStep step_from_json(const Json& j);
Json to_json(const ResolutionScript& s);
ResolutionScript script_from_json(const Json& j);

Json to_json(const MonoidalClass& m);
Json to_json(const BlowupResult& r);
Json to_json(const StepRecord& s);
Json to_json(const ResolutionState& st);
Json to_json(const VerifyReport& r);
Json to_json(const GermClassification& g);
Json to_json(const OpenBookResult& r);
Json to_json(const IndexAudit& a);
Json to_json(const TubeAudit& t);
Json to_json(const DiophantineSolution& s);
Json to_json(const RegistryEntry& e);

std::string divisor_text(const FoliatedChart& c);

}  // namespace foliate
