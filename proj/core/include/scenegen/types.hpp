#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scenegen/geometry.hpp"

namespace scenegen {

// Condensed user input, e.g. "a cozy bedroom".
struct ShortDescription {
  std::string text;

  friend bool operator==(const ShortDescription&, const ShortDescription&) = default;
};

enum class Role { dominant, accessory };

struct ObjectPlacement {
  std::string id;
  std::string category;
  OrientedFootprint footprint;
  Role role = Role::dominant;
  std::optional<std::string> zone_id;    // required for dominants
  std::optional<std::string> parent_id;  // required for accessories, names a dominant

  friend bool operator==(const ObjectPlacement&, const ObjectPlacement&) = default;
};

struct FunctionalityZone {
  std::string id;
  Region region;
  std::string functionality;

  friend bool operator==(const FunctionalityZone&, const FunctionalityZone&) = default;
};

struct HierarchyEdge {
  std::string parent;
  std::string child;

  friend bool operator==(const HierarchyEdge&, const HierarchyEdge&) = default;
};

// Four-level tree: scene root, zones, dominants, accessories.
struct Hierarchy {
  std::string root_id = "scene";
  std::vector<HierarchyEdge> edges;

  std::size_t node_count() const { return edges.size() + 1; }

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

enum class RelationKind { adjacent_to, faces, on_top_of, against_wall, near };
enum class Granularity { zone, dominant, accessory };

struct Relation {
  std::string subject;
  RelationKind kind = RelationKind::adjacent_to;
  std::string object;
  Granularity granularity = Granularity::zone;

  friend bool operator==(const Relation&, const Relation&) = default;
};

using RelationSet = std::vector<Relation>;

struct Layout {
  RoomBoundary room;
  std::vector<FunctionalityZone> zones;
  std::vector<ObjectPlacement> dominants;
  std::vector<ObjectPlacement> accessories;
  Hierarchy hierarchy;
  RelationSet relations;

  friend bool operator==(const Layout&, const Layout&) = default;
};

struct AssetSpec {
  double half_w = 0.25;
  double half_d = 0.25;
  double height = 0.5;
  bool dominant_ok = true;
  bool accessory_ok = true;
};

// Category -> default footprint dimensions. Unknown categories fall back
// to a 0.5 x 0.5 x 0.5 m box so open-vocabulary proposals stay placeable.
struct AssetCatalog {
  std::map<std::string, AssetSpec> items;

  AssetSpec lookup(const std::string& category) const;
  static AssetCatalog builtin();
};

const char* to_string(Role role);
const char* to_string(RelationKind kind);
const char* to_string(Granularity granularity);
Role role_from_string(const std::string& s);
RelationKind relation_kind_from_string(const std::string& s);
Granularity granularity_from_string(const std::string& s);

// Throws ValidationError when any type invariant or cross-reference fails.
void validate_layout(const Layout& layout);
bool layout_is_valid(const Layout& layout);

// Canonical hierarchy derived from zone_id / parent_id fields.
Hierarchy build_hierarchy(const std::vector<FunctionalityZone>& zones,
                          const std::vector<ObjectPlacement>& dominants,
                          const std::vector<ObjectPlacement>& accessories);

// True when the stored hierarchy is structurally consistent with the
// placements: same edge multiset as the canonical tree, every entity once.
bool hierarchy_well_formed(const Layout& layout);

const ObjectPlacement* find_object(const Layout& layout, const std::string& id);
const FunctionalityZone* find_zone(const Layout& layout, const std::string& id);
std::vector<const ObjectPlacement*> all_objects(const Layout& layout);

// Any on_top_of relation between the two ids, in either direction.
bool on_top_pair(const RelationSet& relations, const std::string& a, const std::string& b);
// Object is the subject of an on_top_of relation (sits on a support surface).
bool is_supported(const RelationSet& relations, const std::string& id);
// Pair carries an against_wall exemption grouping either member with a wall.
bool against_wall(const RelationSet& relations, const std::string& id);

}  // namespace scenegen
