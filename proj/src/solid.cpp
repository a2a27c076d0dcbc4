#include "cyltrans/solid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyltrans/error.hpp"

namespace cylt {

namespace {

std::vector<Vec2> project_points(const std::vector<Vec3>& points, const Frame& frame) {
  std::vector<Vec2> out;
  out.reserve(points.size());
  for (const Vec3& p : points) out.push_back(frame.to_plane(p));
  return out;
}

// Flip so the normal compares lexicographically positive.
Vec2 canonical_normal(Vec2 n, double* lo, double* hi) {
  if (n.y < 0.0 || (n.y == 0.0 && n.x < 0.0)) {
    const double new_lo = -*hi;
    const double new_hi = -*lo;
    *lo = new_lo;
    *hi = new_hi;
    return -n;
  }
  return n;
}

}  // namespace

void validate_cylinder(const Cylinder3& cyl, int index) {
  const std::string where = index >= 0 ? "cylinder " + std::to_string(index) : "cylinder";
  if (!(norm(cyl.direction) > 0.0) || !is_finite(cyl.direction)) {
    throw Error(ErrorCode::ZeroDirection, where + ": zero or non-finite direction", index);
  }
  if (cyl.generators.empty()) {
    throw Error(ErrorCode::EmptyInput, where + ": no generators", index);
  }
  for (const Vec3& g : cyl.generators) {
    if (!is_finite(g)) throw Error(ErrorCode::InvalidArgument, where + ": non-finite generator", index);
  }
}

Frame make_frame(Vec3 u) {
  if (!(norm(u) > 0.0) || !is_finite(u)) {
    throw Error(ErrorCode::ZeroDirection, "make_frame: zero direction");
  }
  const Vec3 un = normalized(u);
  const double comps[3] = {std::abs(un.x), std::abs(un.y), std::abs(un.z)};
  int seed_axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (comps[i] < comps[seed_axis]) seed_axis = i;
  }
  Vec3 axis{0.0, 0.0, 0.0};
  if (seed_axis == 0) {
    axis.x = 1.0;
  } else if (seed_axis == 1) {
    axis.y = 1.0;
  } else {
    axis.z = 1.0;
  }
  const Vec3 e1 = normalized(axis - dot(axis, un) * un);
  const Vec3 e2 = cross(un, e1);
  return Frame{un, e1, e2};
}

bool lines_parallel(Vec3 a, Vec3 b, double tol) {
  return norm(cross(normalized(a), normalized(b))) <= tol;
}

Shadow shadow(const Cylinder3& cyl, const Frame& frame) {
  const std::vector<Vec2> pts = project_points(cyl.generators, frame);
  if (lines_parallel(cyl.direction, frame.u)) {
    return convex_hull(pts);
  }
  const Vec2 dir2 = frame.to_plane(normalized(cyl.direction));
  Vec2 n = normalized(perp(dir2));
  double lo = pts[0].x * n.x + pts[0].y * n.y;
  double hi = lo;
  for (const Vec2& p : pts) {
    const double d = dot(p, n);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  n = canonical_normal(n, &lo, &hi);
  return Slab2{n, lo, hi};
}

ConvexPolygon cross_section(const Cylinder3& cyl) {
  return std::get<ConvexPolygon>(shadow(cyl, make_frame(cyl.direction)));
}

bool intersects(const Cylinder3& a, const Cylinder3& b, double eps) {
  const Frame fb = make_frame(b.direction);
  const ConvexPolygon kb = std::get<ConvexPolygon>(shadow(b, fb));
  const Shadow sa = shadow(a, fb);
  if (const Slab2* slab = std::get_if<Slab2>(&sa)) {
    return classify_slab(kb, *slab, eps) != SlabRelation::Disjoint;
  }
  return convex_polygons_intersect(kb, std::get<ConvexPolygon>(sa), eps);
}

bool crosses(const Cylinder3& a, const Cylinder3& b, double eps) {
  if (lines_parallel(a.direction, b.direction)) {
    throw Error(ErrorCode::ParallelAxes, "crosses: parallel axes; perturb directions first");
  }
  const Frame fb = make_frame(b.direction);
  const ConvexPolygon kb = std::get<ConvexPolygon>(shadow(b, fb));
  const Slab2 sa = std::get<Slab2>(shadow(a, fb));
  return classify_slab(kb, sa, eps) == SlabRelation::Crosses;
}

double crossing_margin(const Cylinder3& a, const Cylinder3& b) {
  if (lines_parallel(a.direction, b.direction)) {
    throw Error(ErrorCode::ParallelAxes, "crossing_margin: parallel axes");
  }
  const Frame fb = make_frame(b.direction);
  const ConvexPolygon kb = std::get<ConvexPolygon>(shadow(b, fb));
  const Slab2 sa = std::get<Slab2>(shadow(a, fb));
  const auto [m, M] = extent_along(kb, normalized(sa.normal));
  return std::min(sa.lo - m, M - sa.hi);
}

double cylinder_width(const Cylinder3& cyl) {
  return min_width_slab(cross_section(cyl)).width;
}

bool line_hits_cylinder(const Line3& line, const Cylinder3& cyl, double eps) {
  if (!(norm(line.direction) > 0.0)) {
    throw Error(ErrorCode::ZeroDirection, "line_hits_cylinder: zero line direction");
  }
  const Frame f = make_frame(cyl.direction);
  const ConvexPolygon k = std::get<ConvexPolygon>(shadow(cyl, f));
  const Vec2 p2 = f.to_plane(line.point);
  if (lines_parallel(line.direction, cyl.direction)) {
    return point_in_polygon(k, p2, eps);
  }
  const Vec2 d2 = f.to_plane(normalized(line.direction));
  return line_hits_polygon(p2, d2, k, eps);
}

}  // namespace cylt
