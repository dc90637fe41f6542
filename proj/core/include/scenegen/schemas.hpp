#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace scenegen::agents {

// Named structured-response contracts. Throws SchemaError describing the
// first violated requirement.
void validate_schema(const std::string& schema_id, const nlohmann::json& value);

const std::vector<std::string>& known_schemas();

inline constexpr const char* kSceneParseSchema = "scene-parse";
inline constexpr const char* kZoneGroundingSchema = "zone-grounding";
inline constexpr const char* kDominantProposalSchema = "dominant-proposal";
inline constexpr const char* kAccessoryProposalSchema = "accessory-proposal";
inline constexpr const char* kDiagnosisReportSchema = "diagnosis-report";
inline constexpr const char* kObjectEnrichmentSchema = "object-enrichment";

}  // namespace scenegen::agents
