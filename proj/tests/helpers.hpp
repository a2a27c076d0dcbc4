#pragma once

#include <cmath>
#include <vector>

#include "cyltrans/planar.hpp"
#include "cyltrans/rng.hpp"
#include "cyltrans/solid.hpp"

namespace test_helpers {

constexpr double kPi = 3.14159265358979323846;

inline bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

inline bool near(cylt::Vec2 a, cylt::Vec2 b, double tol = 1e-9) {
  return near(a.x, b.x, tol) && near(a.y, b.y, tol);
}

inline bool near(cylt::Vec3 a, cylt::Vec3 b, double tol = 1e-9) {
  return near(a.x, b.x, tol) && near(a.y, b.y, tol) && near(a.z, b.z, tol);
}

// Random strictly convex polygon: jittered sorted angles on a random ellipse,
// then rotated and translated.
inline cylt::ConvexPolygon random_polygon(cylt::SplitMix64& rng, int min_verts, int max_verts,
                                          double scale = 3.0, double wander = 5.0) {
  const int k =
      min_verts + static_cast<int>(rng.below(static_cast<uint64_t>(max_verts - min_verts + 1)));
  const double rx = rng.uniform(0.35, 1.0) * scale;
  const double ry = rng.uniform(0.35, 1.0) * scale;
  const double tilt = rng.uniform(0.0, 2.0 * kPi);
  const cylt::Vec2 shift{rng.uniform(-wander, wander), rng.uniform(-wander, wander)};
  std::vector<cylt::Vec2> pts;
  pts.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double theta = 2.0 * kPi * (i + 0.3 + 0.4 * rng.uniform()) / k;
    const cylt::Vec2 e{rx * std::cos(theta), ry * std::sin(theta)};
    pts.push_back({shift.x + e.x * std::cos(tilt) - e.y * std::sin(tilt),
                   shift.y + e.x * std::sin(tilt) + e.y * std::cos(tilt)});
  }
  return cylt::convex_hull(pts);
}

// Test-side width oracle #1: per-edge full vertex scan (no caliper advance).
inline double width_by_edge_scan(const cylt::ConvexPolygon& poly) {
  const int n = poly.size();
  if (n < 3) return 0.0;
  double best = 1e300;
  for (int i = 0; i < n; ++i) {
    const cylt::Vec2 a = poly.verts[static_cast<size_t>(i)];
    const cylt::Vec2 b = poly.verts[static_cast<size_t>((i + 1) % n)];
    const cylt::Vec2 nin = cylt::normalized(cylt::perp(b - a));
    double far = 0.0;
    for (const cylt::Vec2& v : poly.verts) far = std::max(far, cylt::dot(v - a, nin));
    best = std::min(best, far);
  }
  return best;
}

// Test-side width oracle #2: dense direction sampling; upper-bounds the true
// width and converges to it, so it checks the implementation to ~diam/steps.
inline double width_by_angle_scan(const cylt::ConvexPolygon& poly, int steps = 20000) {
  double best = 1e300;
  for (int i = 0; i < steps; ++i) {
    const double theta = kPi * i / steps;
    const cylt::Vec2 dir{std::cos(theta), std::sin(theta)};
    const auto [lo, hi] = cylt::extent_along(poly, dir);
    best = std::min(best, hi - lo);
  }
  return best;
}

// Interior point of a cross-section: convex combination of the vertices.
inline cylt::Vec2 random_interior_point(const cylt::ConvexPolygon& poly, cylt::SplitMix64& rng) {
  double total = 0.0;
  cylt::Vec2 acc{0.0, 0.0};
  for (const cylt::Vec2& v : poly.verts) {
    const double wgt = 0.05 + rng.uniform();
    acc = acc + wgt * v;
    total += wgt;
  }
  return (1.0 / total) * acc;
}

// Axis-aligned box cylinder: axis along `dir`, square cross-section of the
// given half-side centered at `center`.
inline cylt::Cylinder3 box_cylinder(cylt::Vec3 dir, cylt::Vec3 center, double half_a, double half_b) {
  const cylt::Frame f = cylt::make_frame(dir);
  const cylt::Vec2 c2 = f.to_plane(center);
  cylt::Cylinder3 cyl;
  cyl.direction = dir;
  for (const cylt::Vec2 s : {cylt::Vec2{-half_a, -half_b}, cylt::Vec2{half_a, -half_b},
                             cylt::Vec2{half_a, half_b}, cylt::Vec2{-half_a, half_b}}) {
    cyl.generators.push_back(f.from_plane(c2 + s));
  }
  return cyl;
}

// The fat/needle pair from the crossing discussion: the fat cylinder severs
// the needle but not vice versa.
inline cylt::Cylinder3 needle_along_y() {
  return box_cylinder(cylt::Vec3{0.0, 1.0, 0.0}, cylt::Vec3{0.0, 0.0, 0.0}, 0.1, 0.1);
}

inline cylt::Cylinder3 fat_along_x() {
  return box_cylinder(cylt::Vec3{1.0, 0.0, 0.0}, cylt::Vec3{0.0, 0.0, 0.0}, 1.0, 1.0);
}

// Hand-built family whose min-width pivot has a segment cross-section, with
// an empty crossing digraph, so the solve lands in the degenerate-segment
// branch. One flat strip plus 28 rectangle cylinders whose axes lie in the
// yz-plane; every projection question reduces to x-interval bookkeeping:
// intervals [c_k - 0.45, c_k + 0.45] against the strip's [-0.4, 0.4], offset
// so no interval ever contains another.
inline std::vector<cylt::Cylinder3> degenerate_segment_family() {
  std::vector<cylt::Cylinder3> family;
  cylt::Cylinder3 strip;
  strip.direction = {0.0, 0.0, 1.0};
  strip.generators = {{-0.4, 0.0, 0.0}, {0.4, 0.0, 0.0}};
  family.push_back(strip);
  for (int k = 1; k <= 28; ++k) {
    const double phi = (20.0 + 50.0 * (k - 1) / 27.0) * kPi / 180.0;
    const cylt::Vec3 dir{0.0, std::cos(phi), std::sin(phi)};
    const cylt::Vec3 side = cylt::normalized(cylt::cross(dir, cylt::Vec3{1.0, 0.0, 0.0}));
    const double cx = 0.1 + 0.001 * k;
    const cylt::Vec3 center{cx, 0.0, 0.0};
    cylt::Cylinder3 slab;
    slab.direction = dir;
    for (const double sx : {-0.45, 0.45}) {
      for (const double sy : {-0.4, 0.4}) {
        slab.generators.push_back(center + sx * cylt::Vec3{1.0, 0.0, 0.0} + sy * side);
      }
    }
    family.push_back(slab);
  }
  return family;
}

// Bipartite early-exit construction: 28 thin needles through one fat
// cylinder; the g side repeats the fat cylinder translated along its own
// axis (which leaves the solid unchanged), so every needle severs all of g.
inline std::pair<std::vector<cylt::Cylinder3>, std::vector<cylt::Cylinder3>>
bipartite_needles_and_fat() {
  std::vector<cylt::Cylinder3> f, g;
  for (int k = 0; k < 28; ++k) {
    const double theta = kPi * (k + 0.5) / 28.0;
    const cylt::Vec3 dir = cylt::normalized(
        cylt::Vec3{0.05 * std::sin(3.0 * theta), std::cos(theta), std::sin(theta)});
    f.push_back(box_cylinder(dir, {0.0, 0.0, 0.0}, 0.05, 0.05));
  }
  const cylt::Cylinder3 fat = fat_along_x();
  for (int k = 0; k < 28; ++k) {
    cylt::Cylinder3 copy = fat;
    for (cylt::Vec3& gen : copy.generators) gen = gen + cylt::Vec3{2.0 * k, 0.0, 0.0};
    g.push_back(copy);
  }
  return {std::move(f), std::move(g)};
}

}  // namespace test_helpers
