#include "scenegen/serialize.hpp"

#include <set>

#include "scenegen/document.hpp"
#include "scenegen/errors.hpp"

namespace scenegen {

namespace {

void write_object(DocWriter& w, const ObjectPlacement& o) {
  w.begin("object", o.id);
  w.field("category", o.category);
  w.field("role", to_string(o.role));
  if (o.zone_id) w.field("zone", *o.zone_id);
  if (o.parent_id) w.field("parent", *o.parent_id);
  w.field("center", {o.footprint.center_x, o.footprint.center_y});
  w.field("yaw", o.footprint.yaw);
  w.field("half_extents", {o.footprint.half_w, o.footprint.half_d});
  w.field("height", o.footprint.height);
  w.end();
}

}  // namespace

std::string serialize_layout(const Layout& layout) {
  DocWriter w;
  w.comment("layout document");
  w.field("version", std::int64_t{1});
  w.begin("room");
  w.field("width", layout.room.width);
  w.field("depth", layout.room.depth);
  w.field("height", layout.room.height);
  w.end();
  for (const auto& z : layout.zones) {
    w.begin("zone", z.id);
    w.field("functionality", z.functionality);
    w.field("region", {z.region.min_x, z.region.min_y, z.region.max_x, z.region.max_y});
    w.end();
  }
  for (const auto& d : layout.dominants) write_object(w, d);
  for (const auto& a : layout.accessories) write_object(w, a);
  const bool trivial_hierarchy =
      layout.hierarchy.edges.empty() && layout.hierarchy.root_id == "scene";
  if (!trivial_hierarchy) {
    w.begin("hierarchy");
    w.field("root", layout.hierarchy.root_id);
    for (const auto& e : layout.hierarchy.edges) {
      w.field("edge", e.parent + " " + e.child);
    }
    w.end();
  }
  if (!layout.relations.empty()) {
    w.begin("relations");
    for (const auto& r : layout.relations) {
      w.field("rel", std::string(to_string(r.kind)) + " " + r.subject + " " + r.object +
                         " " + std::string(to_string(r.granularity)));
    }
    w.end();
  }
  return w.str();
}

namespace {

struct FieldGuard {
  std::set<std::string> seen;
  void claim(const DocLine& line) {
    if (!seen.insert(line.head).second) {
      throw ParseError("duplicate field '" + line.head + "'", line.number, line.head);
    }
  }
  void require(const char* key, int block_line) {
    if (!seen.count(key)) {
      throw ParseError(std::string("missing required field '") + key + "'", block_line, key);
    }
  }
};

RoomBoundary parse_room(DocParser& p, int block_line) {
  RoomBoundary room;
  FieldGuard guard;
  while (true) {
    DocLine line = p.next();
    if (line.head == "end") break;
    guard.claim(line);
    if (line.head == "width") {
      room.width = line.num(0);
    } else if (line.head == "depth") {
      room.depth = line.num(0);
    } else if (line.head == "height") {
      room.height = line.num(0);
    } else {
      throw ParseError("unknown room field '" + line.head + "'", line.number, line.head);
    }
  }
  guard.require("width", block_line);
  guard.require("depth", block_line);
  guard.require("height", block_line);
  return room;
}

FunctionalityZone parse_zone(DocParser& p, const DocLine& header) {
  if (header.args.empty()) {
    throw ParseError("zone record requires an id", header.number, "zone");
  }
  FunctionalityZone z;
  z.id = header.arg(0);
  FieldGuard guard;
  while (true) {
    DocLine line = p.next();
    if (line.head == "end") break;
    guard.claim(line);
    if (line.head == "functionality") {
      z.functionality = line.rest;
    } else if (line.head == "region") {
      if (line.args.size() != 4) {
        throw ParseError("region expects 4 numbers", line.number, "region");
      }
      z.region = {line.num(0), line.num(1), line.num(2), line.num(3)};
    } else {
      throw ParseError("unknown zone field '" + line.head + "'", line.number, line.head);
    }
  }
  guard.require("functionality", header.number);
  guard.require("region", header.number);
  return z;
}

ObjectPlacement parse_object(DocParser& p, const DocLine& header) {
  if (header.args.empty()) {
    throw ParseError("object record requires an id", header.number, "object");
  }
  ObjectPlacement o;
  o.id = header.arg(0);
  FieldGuard guard;
  while (true) {
    DocLine line = p.next();
    if (line.head == "end") break;
    guard.claim(line);
    if (line.head == "category") {
      o.category = line.rest;
    } else if (line.head == "role") {
      try {
        o.role = role_from_string(line.arg(0));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), line.number, "role");
      }
    } else if (line.head == "zone") {
      o.zone_id = line.arg(0);
    } else if (line.head == "parent") {
      o.parent_id = line.arg(0);
    } else if (line.head == "center") {
      if (line.args.size() != 2) {
        throw ParseError("center expects 2 numbers", line.number, "center");
      }
      o.footprint.center_x = line.num(0);
      o.footprint.center_y = line.num(1);
    } else if (line.head == "yaw") {
      o.footprint.yaw = line.num(0);
    } else if (line.head == "half_extents") {
      if (line.args.size() != 2) {
        throw ParseError("half_extents expects 2 numbers", line.number, "half_extents");
      }
      o.footprint.half_w = line.num(0);
      o.footprint.half_d = line.num(1);
    } else if (line.head == "height") {
      o.footprint.height = line.num(0);
    } else {
      throw ParseError("unknown object field '" + line.head + "'", line.number, line.head);
    }
  }
  guard.require("category", header.number);
  guard.require("role", header.number);
  guard.require("center", header.number);
  guard.require("yaw", header.number);
  guard.require("half_extents", header.number);
  guard.require("height", header.number);
  if (o.footprint.yaw < -kPi || o.footprint.yaw >= kPi) {
    o.footprint.yaw = normalize_yaw(o.footprint.yaw);
  }
  return o;
}

Hierarchy parse_hierarchy(DocParser& p) {
  Hierarchy h;
  bool have_root = false;
  while (true) {
    DocLine line = p.next();
    if (line.head == "end") break;
    if (line.head == "root") {
      if (have_root) throw ParseError("duplicate field 'root'", line.number, "root");
      h.root_id = line.arg(0);
      have_root = true;
    } else if (line.head == "edge") {
      if (line.args.size() != 2) {
        throw ParseError("edge expects 2 ids", line.number, "edge");
      }
      h.edges.push_back({line.arg(0), line.arg(1)});
    } else {
      throw ParseError("unknown hierarchy field '" + line.head + "'", line.number,
                       line.head);
    }
  }
  return h;
}

RelationSet parse_relations(DocParser& p) {
  RelationSet rels;
  while (true) {
    DocLine line = p.next();
    if (line.head == "end") break;
    if (line.head != "rel") {
      throw ParseError("unknown relations field '" + line.head + "'", line.number,
                       line.head);
    }
    if (line.args.size() != 4) {
      throw ParseError("rel expects: kind subject object granularity", line.number, "rel");
    }
    Relation r;
    try {
      r.kind = relation_kind_from_string(line.arg(0));
      r.subject = line.arg(1);
      r.object = line.arg(2);
      r.granularity = granularity_from_string(line.arg(3));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line.number, "rel");
    }
    rels.push_back(std::move(r));
  }
  return rels;
}

}  // namespace

Layout deserialize_layout(std::string_view doc) {
  DocParser p(doc);
  Layout layout;
  bool saw_version = false;
  bool saw_room = false;
  bool saw_hierarchy = false;
  while (!p.eof()) {
    DocLine line = p.next();
    if (line.head == "version") {
      if (saw_version) throw ParseError("duplicate version line", line.number, "version");
      if (parse_int(line.arg(0), line.number) != 1) {
        throw ParseError("unsupported document version '" + line.arg(0) + "'",
                         line.number, "version");
      }
      saw_version = true;
    } else if (line.head == "room") {
      if (saw_room) throw ParseError("duplicate room block", line.number, "room");
      layout.room = parse_room(p, line.number);
      saw_room = true;
    } else if (line.head == "zone") {
      layout.zones.push_back(parse_zone(p, line));
    } else if (line.head == "object") {
      ObjectPlacement o = parse_object(p, line);
      if (o.role == Role::dominant) {
        layout.dominants.push_back(std::move(o));
      } else {
        layout.accessories.push_back(std::move(o));
      }
    } else if (line.head == "hierarchy") {
      if (saw_hierarchy) {
        throw ParseError("duplicate hierarchy block", line.number, "hierarchy");
      }
      layout.hierarchy = parse_hierarchy(p);
      saw_hierarchy = true;
    } else if (line.head == "relations") {
      layout.relations = parse_relations(p);
    } else {
      throw ParseError("unknown record '" + line.head + "'", line.number, line.head);
    }
  }
  if (!saw_room) throw ParseError("document has no room block");
  if (!saw_hierarchy &&
      (!layout.zones.empty() || !layout.dominants.empty() || !layout.accessories.empty())) {
    // hand-written documents may omit the hierarchy block
    layout.hierarchy = build_hierarchy(layout.zones, layout.dominants, layout.accessories);
  }
  validate_layout(layout);
  return layout;
}

nlohmann::ordered_json layout_to_json(const Layout& layout) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["room"] = {{"width", layout.room.width},
               {"depth", layout.room.depth},
               {"height", layout.room.height}};
  j["zones"] = nlohmann::ordered_json::array();
  for (const auto& z : layout.zones) {
    j["zones"].push_back({{"id", z.id},
                          {"functionality", z.functionality},
                          {"region", {z.region.min_x, z.region.min_y, z.region.max_x,
                                      z.region.max_y}}});
  }
  auto object_json = [](const ObjectPlacement& o) {
    nlohmann::ordered_json jo;
    jo["id"] = o.id;
    jo["category"] = o.category;
    jo["role"] = to_string(o.role);
    if (o.zone_id) jo["zone"] = *o.zone_id;
    if (o.parent_id) jo["parent"] = *o.parent_id;
    jo["center"] = {o.footprint.center_x, o.footprint.center_y};
    jo["yaw"] = o.footprint.yaw;
    jo["half_extents"] = {o.footprint.half_w, o.footprint.half_d};
    jo["height"] = o.footprint.height;
    return jo;
  };
  j["dominants"] = nlohmann::ordered_json::array();
  for (const auto& d : layout.dominants) j["dominants"].push_back(object_json(d));
  j["accessories"] = nlohmann::ordered_json::array();
  for (const auto& a : layout.accessories) j["accessories"].push_back(object_json(a));
  j["hierarchy"] = {{"root", layout.hierarchy.root_id},
                    {"edges", nlohmann::ordered_json::array()}};
  for (const auto& e : layout.hierarchy.edges) {
    j["hierarchy"]["edges"].push_back({e.parent, e.child});
  }
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : layout.relations) {
    j["relations"].push_back({{"kind", to_string(r.kind)},
                              {"subject", r.subject},
                              {"object", r.object},
                              {"granularity", to_string(r.granularity)}});
  }
  return j;
}

}  // namespace scenegen
