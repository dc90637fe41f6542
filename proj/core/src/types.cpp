#include "scenegen/types.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "scenegen/errors.hpp"

namespace scenegen {

AssetSpec AssetCatalog::lookup(const std::string& category) const {
  auto it = items.find(category);
  if (it != items.end()) return it->second;
  return AssetSpec{};
}

AssetCatalog AssetCatalog::builtin() {
  AssetCatalog c;
  auto add = [&](const std::string& name, double w, double d, double h, bool dom, bool acc) {
    c.items[name] = AssetSpec{w / 2.0, d / 2.0, h, dom, acc};
  };
  add("bed", 1.6, 2.0, 0.55, true, false);
  add("wardrobe", 1.2, 0.6, 2.0, true, false);
  add("dresser", 1.0, 0.5, 0.8, true, true);
  add("nightstand", 0.4, 0.4, 0.5, false, true);
  add("lamp", 0.15, 0.15, 0.4, false, true);
  add("desk", 1.2, 0.6, 0.75, true, false);
  add("chair", 0.45, 0.45, 0.9, false, true);
  add("office_chair", 0.5, 0.5, 1.0, false, true);
  add("bookshelf", 0.8, 0.3, 1.8, true, true);
  add("sofa", 1.8, 0.85, 0.8, true, false);
  add("armchair", 0.8, 0.8, 0.85, true, true);
  add("coffee_table", 1.0, 0.5, 0.45, true, true);
  add("tv_stand", 1.4, 0.4, 0.5, true, false);
  add("rug", 1.6, 1.2, 0.01, false, true);
  add("plant", 0.35, 0.35, 1.2, false, true);
  add("monitor", 0.5, 0.1, 0.4, false, true);
  add("side_table", 0.5, 0.5, 0.55, false, true);
  add("cushion", 0.4, 0.4, 0.12, false, true);
  add("book_stack", 0.25, 0.2, 0.2, false, true);
  return c;
}

const char* to_string(Role role) {
  return role == Role::dominant ? "dominant" : "accessory";
}

const char* to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::adjacent_to: return "adjacent_to";
    case RelationKind::faces: return "faces";
    case RelationKind::on_top_of: return "on_top_of";
    case RelationKind::against_wall: return "against_wall";
    case RelationKind::near: return "near";
  }
  return "adjacent_to";
}

const char* to_string(Granularity granularity) {
  switch (granularity) {
    case Granularity::zone: return "zone";
    case Granularity::dominant: return "dominant";
    case Granularity::accessory: return "accessory";
  }
  return "zone";
}

Role role_from_string(const std::string& s) {
  if (s == "dominant") return Role::dominant;
  if (s == "accessory") return Role::accessory;
  throw ValidationError("unknown role: " + s);
}

RelationKind relation_kind_from_string(const std::string& s) {
  if (s == "adjacent_to") return RelationKind::adjacent_to;
  if (s == "faces") return RelationKind::faces;
  if (s == "on_top_of") return RelationKind::on_top_of;
  if (s == "against_wall") return RelationKind::against_wall;
  if (s == "near") return RelationKind::near;
  throw ValidationError("unknown relation kind: " + s);
}

Granularity granularity_from_string(const std::string& s) {
  if (s == "zone") return Granularity::zone;
  if (s == "dominant") return Granularity::dominant;
  if (s == "accessory") return Granularity::accessory;
  throw ValidationError("unknown granularity: " + s);
}

namespace {

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(),
                      [](unsigned char ch) { return std::isspace(ch); });
}

void validate_footprint(const OrientedFootprint& f, const std::string& id) {
  if (f.half_w <= 0.0 || f.half_d <= 0.0) {
    throw ValidationError("object " + id + ": half extents must be positive");
  }
  if (f.height <= 0.0) {
    throw ValidationError("object " + id + ": height must be positive");
  }
  if (f.yaw < -kPi || f.yaw >= kPi) {
    throw ValidationError("object " + id + ": yaw not normalized to [-pi, pi)");
  }
}

}  // namespace

Hierarchy build_hierarchy(const std::vector<FunctionalityZone>& zones,
                          const std::vector<ObjectPlacement>& dominants,
                          const std::vector<ObjectPlacement>& accessories) {
  Hierarchy h;
  for (const auto& z : zones) h.edges.push_back({h.root_id, z.id});
  for (const auto& d : dominants) {
    h.edges.push_back({d.zone_id.value_or(""), d.id});
  }
  for (const auto& a : accessories) {
    h.edges.push_back({a.parent_id.value_or(""), a.id});
  }
  return h;
}

bool hierarchy_well_formed(const Layout& layout) {
  const Hierarchy canonical =
      build_hierarchy(layout.zones, layout.dominants, layout.accessories);
  if (layout.hierarchy.root_id != canonical.root_id) return false;
  if (layout.hierarchy.edges.size() != canonical.edges.size()) return false;
  auto key = [](const HierarchyEdge& e) { return e.parent + "\x1f" + e.child; };
  std::multiset<std::string> got, want;
  for (const auto& e : layout.hierarchy.edges) got.insert(key(e));
  for (const auto& e : canonical.edges) want.insert(key(e));
  if (got != want) return false;
  // every child appears exactly once
  std::unordered_set<std::string> children;
  for (const auto& e : layout.hierarchy.edges) {
    if (!children.insert(e.child).second) return false;
  }
  return true;
}

const ObjectPlacement* find_object(const Layout& layout, const std::string& id) {
  for (const auto& d : layout.dominants) {
    if (d.id == id) return &d;
  }
  for (const auto& a : layout.accessories) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

const FunctionalityZone* find_zone(const Layout& layout, const std::string& id) {
  for (const auto& z : layout.zones) {
    if (z.id == id) return &z;
  }
  return nullptr;
}

std::vector<const ObjectPlacement*> all_objects(const Layout& layout) {
  std::vector<const ObjectPlacement*> out;
  out.reserve(layout.dominants.size() + layout.accessories.size());
  for (const auto& d : layout.dominants) out.push_back(&d);
  for (const auto& a : layout.accessories) out.push_back(&a);
  return out;
}

bool on_top_pair(const RelationSet& relations, const std::string& a, const std::string& b) {
  for (const auto& r : relations) {
    if (r.kind != RelationKind::on_top_of) continue;
    if ((r.subject == a && r.object == b) || (r.subject == b && r.object == a)) return true;
  }
  return false;
}

bool is_supported(const RelationSet& relations, const std::string& id) {
  for (const auto& r : relations) {
    if (r.kind == RelationKind::on_top_of && r.subject == id) return true;
  }
  return false;
}

bool against_wall(const RelationSet& relations, const std::string& id) {
  for (const auto& r : relations) {
    if (r.kind == RelationKind::against_wall && (r.subject == id || r.object == id)) {
      return true;
    }
  }
  return false;
}

void validate_layout(const Layout& layout) {
  if (layout.room.width <= 0.0 || layout.room.depth <= 0.0 || layout.room.height <= 0.0) {
    throw ValidationError("room dimensions must be strictly positive");
  }
  const Region room = room_region(layout.room);

  std::unordered_set<std::string> ids;
  auto claim_id = [&](const std::string& id, const char* what) {
    if (!valid_id(id)) {
      throw ValidationError(std::string(what) + " id must be non-empty without whitespace");
    }
    if (!ids.insert(id).second) {
      throw ValidationError("duplicate id: " + id);
    }
  };

  std::unordered_set<std::string> zone_ids;
  for (const auto& z : layout.zones) {
    claim_id(z.id, "zone");
    zone_ids.insert(z.id);
    if (z.functionality.empty()) {
      throw ValidationError("zone " + z.id + ": functionality label is empty");
    }
    if (z.region.min_x >= z.region.max_x || z.region.min_y >= z.region.max_y) {
      throw ValidationError("zone " + z.id + ": degenerate region");
    }
    if (!room.contains(z.region)) {
      throw ValidationError("zone " + z.id + ": region exceeds room bounds");
    }
  }

  std::unordered_set<std::string> dominant_ids;
  for (const auto& d : layout.dominants) {
    claim_id(d.id, "object");
    dominant_ids.insert(d.id);
    validate_footprint(d.footprint, d.id);
    if (d.role != Role::dominant) {
      throw ValidationError("object " + d.id + ": listed as dominant but role differs");
    }
    if (!d.zone_id || !zone_ids.count(*d.zone_id)) {
      throw ValidationError("dominant " + d.id + ": zone reference missing or unknown");
    }
    if (d.parent_id) {
      throw ValidationError("dominant " + d.id + ": parent_id must be unset");
    }
  }

  for (const auto& a : layout.accessories) {
    claim_id(a.id, "object");
    validate_footprint(a.footprint, a.id);
    if (a.role != Role::accessory) {
      throw ValidationError("object " + a.id + ": listed as accessory but role differs");
    }
    if (!a.parent_id || !dominant_ids.count(*a.parent_id)) {
      throw ValidationError("accessory " + a.id + ": parent reference missing or unknown");
    }
    if (a.zone_id && !zone_ids.count(*a.zone_id)) {
      throw ValidationError("accessory " + a.id + ": unknown zone reference");
    }
  }

  if (!hierarchy_well_formed(layout)) {
    throw ValidationError("hierarchy inconsistent with placements");
  }

  for (const auto& r : layout.relations) {
    if (!ids.count(r.subject)) {
      throw ValidationError("relation references unknown id: " + r.subject);
    }
    if (!ids.count(r.object)) {
      throw ValidationError("relation references unknown id: " + r.object);
    }
  }
}

bool layout_is_valid(const Layout& layout) {
  try {
    validate_layout(layout);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace scenegen
