#pragma once

#include <variant>
#include <vector>

#include "cyltrans/planar.hpp"
#include "cyltrans/vec.hpp"

namespace cylt {

// Two axis directions closer than this (as |sin| of the line angle) are
// treated as parallel; below the predicate tolerance scale.
inline constexpr double kParallelTol = 1e-9;

// Unbounded solid: conv(generators) + span(direction). The generators are an
// arbitrary compact description of the cross-section; axial components are
// absorbed by the axis line.
struct Cylinder3 {
  Vec3 direction{0.0, 0.0, 1.0};
  std::vector<Vec3> generators;
};

struct Line3 {
  Vec3 point;
  Vec3 direction{0.0, 0.0, 1.0};
};

// Right-handed orthonormal frame with u as the projection axis and (e1, e2)
// spanning the image plane.
struct Frame {
  Vec3 u, e1, e2;

  Vec2 to_plane(Vec3 p) const { return {dot(p, e1), dot(p, e2)}; }
  Vec3 from_plane(Vec2 q) const { return q.x * e1 + q.y * e2; }
};

using Shadow = std::variant<ConvexPolygon, Slab2>;

// Deterministic frame: e1 seeds from the coordinate axis with the smallest
// |component| in u (ties to the lowest axis index), e2 = u x e1.
Frame make_frame(Vec3 u);

bool lines_parallel(Vec3 a, Vec3 b, double tol = kParallelTol);

// Orthogonal projection of the cylinder onto the frame plane: a polygon when
// projecting along the cylinder's own axis, a slab otherwise.
Shadow shadow(const Cylinder3& cyl, const Frame& frame);

// Hull of the generators projected along the cylinder's own axis.
ConvexPolygon cross_section(const Cylinder3& cyl);

bool intersects(const Cylinder3& a, const Cylinder3& b, double eps = kEps);

// True iff a \ b is disconnected; requires non-parallel axes (callers perturb
// first). Computed in b's axis frame: a projects to a slab that b's
// cross-section must span.
bool crosses(const Cylinder3& a, const Cylinder3& b, double eps = kEps);

// Signed robustness of the crossing predicate: positive = crossing with that
// much slack on both bounding lines, negative = that far from spanning.
double crossing_margin(const Cylinder3& a, const Cylinder3& b);

// Minimal width of the cylinder's own cross-section.
double cylinder_width(const Cylinder3& cyl);

bool line_hits_cylinder(const Line3& line, const Cylinder3& cyl, double eps = kEps);

void validate_cylinder(const Cylinder3& cyl, int index = -1);

}  // namespace cylt
