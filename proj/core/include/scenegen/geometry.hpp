#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scenegen {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);
double norm(Vec2 a);

// Floor rectangle of the room is [0, width] x [0, depth]; height is the
// vertical clearance.
struct RoomBoundary {
  double width = 0.0;
  double depth = 0.0;
  double height = 0.0;

  friend bool operator==(const RoomBoundary&, const RoomBoundary&) = default;
};

// Rotated rectangle on the floor plane plus an object height. Yaw is kept
// normalized to [-pi, pi).
struct OrientedFootprint {
  double center_x = 0.0;
  double center_y = 0.0;
  double yaw = 0.0;
  double half_w = 0.0;
  double half_d = 0.0;
  double height = 0.0;

  friend bool operator==(const OrientedFootprint&, const OrientedFootprint&) = default;
};

// Axis-aligned rectangle in room coordinates.
struct Region {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  double area() const { return width() * height(); }
  Vec2 center() const { return {(min_x + max_x) * 0.5, (min_y + max_y) * 0.5}; }

  bool contains(Vec2 p, double tol = 1e-9) const {
    return p.x >= min_x - tol && p.x <= max_x + tol && p.y >= min_y - tol &&
           p.y <= max_y + tol;
  }
  bool contains(const Region& r, double tol = 1e-9) const {
    return r.min_x >= min_x - tol && r.min_y >= min_y - tol &&
           r.max_x <= max_x + tol && r.max_y <= max_y + tol;
  }
  // Closed rectangles share at least a point (touching counts).
  bool touches(const Region& r, double tol = 1e-9) const {
    return r.min_x <= max_x + tol && r.max_x >= min_x - tol &&
           r.min_y <= max_y + tol && r.max_y >= min_y - tol;
  }

  friend bool operator==(const Region&, const Region&) = default;
};

Region room_region(const RoomBoundary& room);

// Placement bounds derived from a functionality zone: the buffer region is
// the preferred space, the interactive region is the fallback shared with
// neighbouring zones. buffer is always contained in interactive.
struct ZoneConstraint {
  std::string zone_id;
  Region buffer;
  Region interactive;

  friend bool operator==(const ZoneConstraint&, const ZoneConstraint&) = default;
};

struct FootprintDims {
  double half_w = 0.0;
  double half_d = 0.0;
  double height = 0.0;
};

double normalize_yaw(double yaw);

OrientedFootprint make_footprint(double cx, double cy, double yaw, double half_w,
                                 double half_d, double height);

std::array<Vec2, 4> footprint_corners(const OrientedFootprint& f);
double footprint_area(const OrientedFootprint& f);
Region footprint_aabb(const OrientedFootprint& f);
bool footprint_in_region(const OrientedFootprint& f, const Region& r, double tol = 1e-9);

// Footprint grown by delta on every side (same center and yaw).
OrientedFootprint inflated(const OrientedFootprint& f, double delta);
OrientedFootprint translated(const OrientedFootprint& f, Vec2 by);

// Exact intersection area of two rotated rectangles via convex polygon
// clipping. Zero when disjoint or merely edge-touching.
double overlap_area(const OrientedFootprint& a, const OrientedFootprint& b);

// Minimum distance between the two rectangle boundaries; zero when the
// rectangles touch or overlap.
double clearance_distance(const OrientedFootprint& a, const OrientedFootprint& b);

// Area of the footprint lying outside the room floor rectangle.
double oob_excess(const OrientedFootprint& f, const RoomBoundary& room);

// Rectangle expanded by delta on all sides, then clipped to the room floor.
Region dilate_region(const Region& r, double delta, const RoomBoundary& clip);

// Minimal-translation data for a penetrating pair, per separating axis.
// `shift` moves `a` so the pair becomes edge-touching along that axis.
struct SeparationOption {
  Vec2 shift;
  double distance = 0.0;
};

// All axis-aligned-with-either-box candidate translations of `a` that
// resolve its overlap with `b`, sorted by translation length.
std::vector<SeparationOption> separation_options(const OrientedFootprint& a,
                                                 const OrientedFootprint& b);

// Deterministic grid search for a free pose inside a zone constraint.
// Priority 1: fully inside `buffer` with zero overlap against `occupied`.
// Priority 2: fully inside `interactive` with zero overlap against
// `occupied` inflated by `interactive_clearance`.
// Scan order is row-major over a `grid_step` lattice with four cardinal
// yaws per cell, starting from a seed-derived offset.
std::optional<OrientedFootprint> candidate_pose(
    const ZoneConstraint& constraint, const FootprintDims& dims,
    std::span<const OrientedFootprint> occupied, std::uint64_t seed,
    double grid_step = 0.1, double interactive_clearance = 0.0);

}  // namespace scenegen
