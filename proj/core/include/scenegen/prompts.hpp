#pragma once

#include <string>
#include <vector>

#include "scenegen/types.hpp"

namespace scenegen::agents {

// Prompt assembly for each structured call. Every template embeds its
// machine-readable context as bracketed key-value sections so transcripts
// replay deterministically.

std::string scene_parse_prompt(const std::string& scene_id,
                               const std::vector<std::string>& views);

std::string zone_grounding_prompt(const std::string& augmented_description,
                                  const RoomBoundary& room);

std::string dominant_proposal_prompt(const std::string& augmented_description,
                                     const RoomBoundary& room,
                                     const FunctionalityZone& zone,
                                     const ZoneConstraint& constraint,
                                     const std::vector<ObjectPlacement>& placed);

struct AccessoryCriteriaView {
  bool allow_support = true;
  double adjacency = 0.6;
  double facing_tolerance = 0.0;
};

std::string accessory_proposal_prompt(const std::string& augmented_description,
                                      const ObjectPlacement& parent,
                                      const std::vector<ObjectPlacement>& existing,
                                      const AccessoryCriteriaView& criteria);

std::string diagnosis_prompt(const std::string& layout_doc, const std::string& image_ref,
                             double clearance_required,
                             const std::vector<std::string>& history_lines);

std::string enrichment_prompt(const std::string& description);

}  // namespace scenegen::agents
