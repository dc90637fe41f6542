#include "scenegen/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace scenegen {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

Region room_region(const RoomBoundary& room) {
  return {0.0, 0.0, room.width, room.depth};
}

double normalize_yaw(double yaw) {
  double y = std::fmod(yaw + kPi, 2.0 * kPi);
  if (y < 0.0) y += 2.0 * kPi;
  return y - kPi;
}

OrientedFootprint make_footprint(double cx, double cy, double yaw, double half_w,
                                 double half_d, double height) {
  // in-range yaw passes through bit-exact
  const double y = (yaw >= -kPi && yaw < kPi) ? yaw : normalize_yaw(yaw);
  return {cx, cy, y, half_w, half_d, height};
}

std::array<Vec2, 4> footprint_corners(const OrientedFootprint& f) {
  const double c = std::cos(f.yaw);
  const double s = std::sin(f.yaw);
  auto to_world = [&](double lx, double ly) -> Vec2 {
    return {f.center_x + lx * c - ly * s, f.center_y + lx * s + ly * c};
  };
  // counter-clockwise
  return {to_world(f.half_w, f.half_d), to_world(-f.half_w, f.half_d),
          to_world(-f.half_w, -f.half_d), to_world(f.half_w, -f.half_d)};
}

double footprint_area(const OrientedFootprint& f) {
  return 4.0 * f.half_w * f.half_d;
}

Region footprint_aabb(const OrientedFootprint& f) {
  auto cs = footprint_corners(f);
  Region r{cs[0].x, cs[0].y, cs[0].x, cs[0].y};
  for (const auto& p : cs) {
    r.min_x = std::min(r.min_x, p.x);
    r.min_y = std::min(r.min_y, p.y);
    r.max_x = std::max(r.max_x, p.x);
    r.max_y = std::max(r.max_y, p.y);
  }
  return r;
}

bool footprint_in_region(const OrientedFootprint& f, const Region& r, double tol) {
  for (const auto& p : footprint_corners(f)) {
    if (!r.contains(p, tol)) return false;
  }
  return true;
}

OrientedFootprint inflated(const OrientedFootprint& f, double delta) {
  OrientedFootprint g = f;
  g.half_w += delta;
  g.half_d += delta;
  return g;
}

OrientedFootprint translated(const OrientedFootprint& f, Vec2 by) {
  OrientedFootprint g = f;
  g.center_x += by.x;
  g.center_y += by.y;
  return g;
}

namespace {

double shoelace(const std::vector<Vec2>& poly) {
  double twice = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    twice += cross(p, q);
  }
  return std::abs(twice) * 0.5;
}

// Keep the part of `poly` on the left of the directed edge a->b.
std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& poly, Vec2 a, Vec2 b) {
  std::vector<Vec2> out;
  const std::size_t n = poly.size();
  out.reserve(n + 1);
  const Vec2 dir = b - a;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = poly[i];
    const Vec2 q = poly[(i + 1) % n];
    const double dp = cross(dir, p - a);
    const double dq = cross(dir, q - a);
    if (dp >= 0.0) out.push_back(p);
    if ((dp > 0.0 && dq < 0.0) || (dp < 0.0 && dq > 0.0)) {
      const double t = dp / (dp - dq);
      out.push_back(p + (q - p) * t);
    }
  }
  return out;
}

double clipped_area(const OrientedFootprint& subject, const std::array<Vec2, 4>& clip) {
  auto cs = footprint_corners(subject);
  std::vector<Vec2> poly(cs.begin(), cs.end());
  for (std::size_t i = 0; i < 4 && poly.size() >= 3; ++i) {
    poly = clip_half_plane(poly, clip[i], clip[(i + 1) % 4]);
  }
  if (poly.size() < 3) return 0.0;
  return shoelace(poly);
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + ab * t));
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return true;
  return false;
}

double segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                  std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

}  // namespace

double overlap_area(const OrientedFootprint& a, const OrientedFootprint& b) {
  return clipped_area(a, footprint_corners(b));
}

double clearance_distance(const OrientedFootprint& a, const OrientedFootprint& b) {
  if (overlap_area(a, b) > 0.0) return 0.0;
  auto ca = footprint_corners(a);
  auto cb = footprint_corners(b);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      best = std::min(best, segment_distance(ca[i], ca[(i + 1) % 4], cb[j], cb[(j + 1) % 4]));
    }
  }
  return best;
}

double oob_excess(const OrientedFootprint& f, const RoomBoundary& room) {
  const std::array<Vec2, 4> room_corners = {Vec2{0.0, 0.0}, Vec2{room.width, 0.0},
                                            Vec2{room.width, room.depth}, Vec2{0.0, room.depth}};
  const double inside = clipped_area(f, room_corners);
  return std::max(0.0, footprint_area(f) - inside);
}

Region dilate_region(const Region& r, double delta, const RoomBoundary& clip) {
  Region out{r.min_x - delta, r.min_y - delta, r.max_x + delta, r.max_y + delta};
  out.min_x = std::max(out.min_x, 0.0);
  out.min_y = std::max(out.min_y, 0.0);
  out.max_x = std::min(out.max_x, clip.width);
  out.max_y = std::min(out.max_y, clip.depth);
  return out;
}

std::vector<SeparationOption> separation_options(const OrientedFootprint& a,
                                                 const OrientedFootprint& b) {
  std::vector<SeparationOption> options;
  auto ca = footprint_corners(a);
  auto cb = footprint_corners(b);
  auto push_axis_options = [&](Vec2 axis) {
    const double len = norm(axis);
    if (len <= 0.0) return;
    const Vec2 u = axis * (1.0 / len);
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    double bmin = amin, bmax = amax;
    for (int i = 0; i < 4; ++i) {
      amin = std::min(amin, dot(ca[i], u));
      amax = std::max(amax, dot(ca[i], u));
      bmin = std::min(bmin, dot(cb[i], u));
      bmax = std::max(bmax, dot(cb[i], u));
    }
    if (amax <= bmin || bmax <= amin) return;  // already separated on this axis
    // Exit distances for moving `a` toward +u and toward -u.
    options.push_back({u * (bmax - amin), bmax - amin});
    options.push_back({u * -(amax - bmin), amax - bmin});
  };
  // Face normals of both rectangles (two per box).
  push_axis_options(ca[1] - ca[0]);
  push_axis_options(ca[3] - ca[0]);
  push_axis_options(cb[1] - cb[0]);
  push_axis_options(cb[3] - cb[0]);
  std::stable_sort(options.begin(), options.end(),
                   [](const SeparationOption& l, const SeparationOption& r) {
                     return l.distance < r.distance;
                   });
  return options;
}

namespace {

struct Grid {
  double origin_x = 0.0;
  double origin_y = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  double step = 0.1;

  std::size_t cells() const { return nx * ny; }
  Vec2 point(std::size_t flat) const {
    const std::size_t j = flat / nx;
    const std::size_t i = flat % nx;
    return {origin_x + static_cast<double>(i) * step,
            origin_y + static_cast<double>(j) * step};
  }
};

Grid make_grid(const Region& r, double step) {
  Grid g;
  g.origin_x = r.min_x;
  g.origin_y = r.min_y;
  g.step = step;
  g.nx = static_cast<std::size_t>(std::floor(r.width() / step + 1e-9)) + 1;
  g.ny = static_cast<std::size_t>(std::floor(r.height() / step + 1e-9)) + 1;
  return g;
}

constexpr double kOverlapZero = 1e-9;

std::optional<OrientedFootprint> scan_region(const Region& region,
                                             const FootprintDims& dims,
                                             std::span<const OrientedFootprint> occupied,
                                             double inflate_by, std::size_t offset,
                                             double step) {
  const Grid grid = make_grid(region, step);
  if (grid.cells() == 0) return std::nullopt;
  const double yaws[4] = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
  for (std::size_t k = 0; k < grid.cells(); ++k) {
    const Vec2 at = grid.point((offset + k) % grid.cells());
    for (double raw_yaw : yaws) {
      OrientedFootprint f =
          make_footprint(at.x, at.y, raw_yaw, dims.half_w, dims.half_d, dims.height);
      if (!footprint_in_region(f, region)) continue;
      bool free = true;
      for (const auto& occ : occupied) {
        if (overlap_area(f, inflate_by > 0.0 ? inflated(occ, inflate_by) : occ) >
            kOverlapZero) {
          free = false;
          break;
        }
      }
      if (free) return f;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OrientedFootprint> candidate_pose(const ZoneConstraint& constraint,
                                                const FootprintDims& dims,
                                                std::span<const OrientedFootprint> occupied,
                                                std::uint64_t seed, double grid_step,
                                                double interactive_clearance) {
  std::mt19937_64 rng(seed);
  const Grid buf_grid = make_grid(constraint.buffer, grid_step);
  const std::size_t buf_offset = buf_grid.cells() > 0 ? rng() % buf_grid.cells() : 0;
  if (auto pose = scan_region(constraint.buffer, dims, occupied, 0.0, buf_offset, grid_step)) {
    return pose;
  }
  const Grid int_grid = make_grid(constraint.interactive, grid_step);
  const std::size_t int_offset = int_grid.cells() > 0 ? rng() % int_grid.cells() : 0;
  return scan_region(constraint.interactive, dims, occupied, interactive_clearance,
                     int_offset, grid_step);
}

}  // namespace scenegen
