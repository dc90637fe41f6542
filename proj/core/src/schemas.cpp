#include "scenegen/schemas.hpp"

#include <algorithm>

#include "scenegen/errors.hpp"

namespace scenegen::agents {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& schema_id, const std::string& what) {
  throw SchemaError("schema " + schema_id + ": " + what);
}

const json& member(const std::string& schema_id, const json& obj, const char* key) {
  if (!obj.is_object()) fail(schema_id, "reply is not a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(schema_id, std::string("missing field '") + key + "'");
  return *it;
}

std::string required_string(const std::string& schema_id, const json& obj, const char* key,
                            bool allow_empty = false) {
  const json& v = member(schema_id, obj, key);
  if (!v.is_string()) fail(schema_id, std::string("field '") + key + "' must be a string");
  std::string s = v.get<std::string>();
  if (!allow_empty && s.empty()) {
    fail(schema_id, std::string("field '") + key + "' must be non-empty");
  }
  return s;
}

void require_string_array(const std::string& schema_id, const json& obj, const char* key) {
  const json& v = member(schema_id, obj, key);
  if (!v.is_array()) fail(schema_id, std::string("field '") + key + "' must be an array");
  for (const auto& item : v) {
    if (!item.is_string()) {
      fail(schema_id, std::string("field '") + key + "' must contain only strings");
    }
  }
}

void require_number_array(const std::string& schema_id, const json& obj, const char* key,
                          std::size_t count) {
  const json& v = member(schema_id, obj, key);
  if (!v.is_array() || v.size() != count) {
    fail(schema_id,
         std::string("field '") + key + "' must be an array of " + std::to_string(count) +
             " numbers");
  }
  for (const auto& item : v) {
    if (!item.is_number()) {
      fail(schema_id, std::string("field '") + key + "' must contain only numbers");
    }
  }
}

double required_number(const std::string& schema_id, const json& obj, const char* key) {
  const json& v = member(schema_id, obj, key);
  if (!v.is_number()) fail(schema_id, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

void validate_scene_parse(const json& v) {
  required_string(kSceneParseSchema, v, "summary");
  require_string_array(kSceneParseSchema, v, "relations");
  require_string_array(kSceneParseSchema, v, "scales");
}

void validate_zone_grounding(const json& v) {
  const json& zones = member(kZoneGroundingSchema, v, "zones");
  if (!zones.is_array() || zones.empty() || zones.size() > 6) {
    fail(kZoneGroundingSchema, "'zones' must hold between 1 and 6 entries");
  }
  for (const auto& z : zones) {
    required_string(kZoneGroundingSchema, z, "functionality");
    require_number_array(kZoneGroundingSchema, z, "region", 4);
  }
}

void validate_dominant_proposal(const json& v) {
  const json& props = member(kDominantProposalSchema, v, "proposals");
  if (!props.is_array()) fail(kDominantProposalSchema, "'proposals' must be an array");
  for (const auto& p : props) {
    required_string(kDominantProposalSchema, p, "category");
    require_number_array(kDominantProposalSchema, p, "center", 2);
    required_number(kDominantProposalSchema, p, "yaw");
  }
}

void validate_accessory_proposal(const json& v) {
  const json& props = member(kAccessoryProposalSchema, v, "proposals");
  if (!props.is_array()) fail(kAccessoryProposalSchema, "'proposals' must be an array");
  for (const auto& p : props) {
    required_string(kAccessoryProposalSchema, p, "category");
    const std::string placement = required_string(kAccessoryProposalSchema, p, "placement");
    if (placement != "on_top" && placement != "beside") {
      fail(kAccessoryProposalSchema, "'placement' must be 'on_top' or 'beside'");
    }
    require_number_array(kAccessoryProposalSchema, p, "offset", 2);
    if (p.contains("target") && !p["target"].is_string()) {
      fail(kAccessoryProposalSchema, "'target' must be a string when present");
    }
  }
}

void validate_diagnosis_report(const json& v) {
  const json& pen = member(kDiagnosisReportSchema, v, "penetrations");
  if (!pen.is_array()) fail(kDiagnosisReportSchema, "'penetrations' must be an array");
  for (const auto& p : pen) {
    required_string(kDiagnosisReportSchema, p, "a");
    required_string(kDiagnosisReportSchema, p, "b");
    required_number(kDiagnosisReportSchema, p, "overlap");
  }
  const json& clr = member(kDiagnosisReportSchema, v, "clearances");
  if (!clr.is_array()) fail(kDiagnosisReportSchema, "'clearances' must be an array");
  for (const auto& p : clr) {
    required_string(kDiagnosisReportSchema, p, "a");
    required_string(kDiagnosisReportSchema, p, "b");
    required_number(kDiagnosisReportSchema, p, "distance");
    required_number(kDiagnosisReportSchema, p, "required");
  }
  const json& oob = member(kDiagnosisReportSchema, v, "oob");
  if (!oob.is_array()) fail(kDiagnosisReportSchema, "'oob' must be an array");
  for (const auto& p : oob) {
    required_string(kDiagnosisReportSchema, p, "id");
    required_number(kDiagnosisReportSchema, p, "excess");
  }
  const json& sug = member(kDiagnosisReportSchema, v, "suggestions");
  if (!sug.is_array()) fail(kDiagnosisReportSchema, "'suggestions' must be an array");
  for (const auto& s : sug) {
    require_string_array(kDiagnosisReportSchema, s, "targets");
    required_string(kDiagnosisReportSchema, s, "directive");
  }
}

void validate_object_enrichment(const json& v) {
  require_string_array(kObjectEnrichmentSchema, v, "objects");
}

}  // namespace

const std::vector<std::string>& known_schemas() {
  static const std::vector<std::string> ids = {
      kSceneParseSchema,      kZoneGroundingSchema,   kDominantProposalSchema,
      kAccessoryProposalSchema, kDiagnosisReportSchema, kObjectEnrichmentSchema};
  return ids;
}

void validate_schema(const std::string& schema_id, const nlohmann::json& value) {
  if (schema_id == kSceneParseSchema) {
    validate_scene_parse(value);
  } else if (schema_id == kZoneGroundingSchema) {
    validate_zone_grounding(value);
  } else if (schema_id == kDominantProposalSchema) {
    validate_dominant_proposal(value);
  } else if (schema_id == kAccessoryProposalSchema) {
    validate_accessory_proposal(value);
  } else if (schema_id == kDiagnosisReportSchema) {
    validate_diagnosis_report(value);
  } else if (schema_id == kObjectEnrichmentSchema) {
    validate_object_enrichment(value);
  } else {
    throw SchemaError("unknown schema id: " + schema_id);
  }
}

}  // namespace scenegen::agents
