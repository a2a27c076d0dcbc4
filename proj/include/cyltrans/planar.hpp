#pragma once

#include <utility>
#include <vector>

#include "cyltrans/vec.hpp"

namespace cylt {

// Default absolute tolerance for incidence predicates. Instances are assumed
// normalized to the [-100, 100] coordinate box; generators keep predicate
// margins well above this.
inline constexpr double kEps = 1e-9;

// Convex polygon in canonical form: counterclockwise vertex order starting at
// the lexicographically smallest vertex, strictly convex for >= 3 vertices.
// Degenerate forms are allowed: 1 vertex (point) and 2 vertices (segment).
struct ConvexPolygon {
  std::vector<Vec2> verts;

  int size() const { return static_cast<int>(verts.size()); }
  bool operator==(const ConvexPolygon& other) const { return verts == other.verts; }
};

enum class SlabRelation { Disjoint, Meets, Crosses };

// Region between two parallel lines: { p : lo <= dot(p, normal)/|normal| <= hi }.
struct Slab2 {
  Vec2 normal{0.0, 1.0};
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
};

// Canonical hull of a nonempty point set (throws EmptyInput / InvalidArgument).
ConvexPolygon convex_hull(const std::vector<Vec2>& points);

bool is_canonical(const ConvexPolygon& poly);

// [min, max] of dot(v, unit_dir) over the vertices.
std::pair<double, double> extent_along(const ConvexPolygon& poly, Vec2 unit_dir);

struct MinWidthResult {
  Slab2 slab;     // unit normal, canonical sign; contains the polygon exactly
  double width = 0.0;
  int edge = 0;   // index of the achieving edge in canonical vertex order
};

// Minimal-width enclosing slab via rotating calipers over edge normals.
// Ties between edges break to the lowest edge index.
MinWidthResult min_width_slab(const ConvexPolygon& poly);

// Disjoint iff the polygon misses the slab entirely; Crosses iff the polygon
// meets both bounding lines (closed-set semantics: single-point tangency
// counts); Meets otherwise.
SlabRelation classify_slab(const ConvexPolygon& poly, const Slab2& slab, double eps = kEps);

struct ExtremePair {
  Vec2 min, max;
  int min_index = 0, max_index = 0;
};

// Extreme vertices along `dir`; exact-value ties break to the
// lexicographically smallest vertex.
ExtremePair extreme_points(const ConvexPolygon& poly, Vec2 dir);

// True iff the infinite line {point + t*dir} meets the polygon (closed).
bool line_hits_polygon(Vec2 point, Vec2 dir, const ConvexPolygon& poly, double eps = kEps);

// Closed containment with eps inflation; works for all degenerate forms.
bool point_in_polygon(const ConvexPolygon& poly, Vec2 p, double eps = kEps);

// Intersection test between two compact convex polygons (degenerate forms
// included), closed sets with eps tolerance.
bool convex_polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b, double eps = kEps);

// Clip of the infinite line {p0 + t*dir} against a polygon with interior
// (>= 3 vertices). Returns entry/exit points ordered by t together with the
// edge index each lies on; fails (returns false) when the line misses.
struct LineClip {
  Vec2 enter, exit;
  int enter_edge = 0, exit_edge = 0;
  double t_enter = 0.0, t_exit = 0.0;
};
bool clip_line_to_polygon(Vec2 p0, Vec2 dir, const ConvexPolygon& poly, LineClip* out);

// Max pairwise vertex distance (0 for a single point).
double polygon_diameter(const ConvexPolygon& poly);

// Arithmetic mean of the vertices.
Vec2 vertex_centroid(const ConvexPolygon& poly);

}  // namespace cylt
