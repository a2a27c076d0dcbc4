#pragma once

#include <cstdint>
#include <vector>

#include "cyltrans/planar.hpp"

namespace cylt {

// Piercing set for the wide non-crossing slabs of a convex polygon K of width
// w: the four boundary anchors a, b, c, d plus, for each boundary arc between
// consecutive distinct anchors, the two chord endpoints pushed w/2 to the
// arc's side. At most 4 + 2*4 = 12 points.
struct PiercingSet {
  std::vector<Vec2> points;  // 1..12, deduplicated
  double width = 0.0;

  // Anchors: a, c are the midline/boundary intersections (a lexicographically
  // smaller); b, d the extreme vertices along the midline direction, with
  // b == a / d == c when the extreme is attained there.
  Vec2 a, b, c, d;

  struct Rectangle {
    Vec2 p, q;        // chord endpoints, q counterclockwise from p
    Vec2 out_p, out_q;  // p, q pushed w/2 along `outward`
    Vec2 outward;     // unit chord normal on the arc's side
  };
  std::vector<Rectangle> rectangles;
};

PiercingSet piercing_points(const ConvexPolygon& poly);

// Samples `trials` slabs of width >= width(K), uniform over (angle, offset)
// conditioned on classify_slab == Meets, and returns the sampled slabs that
// contain no point of T (closed containment inflated by `inflate`). Empty
// result means the piercing property held on every sample.
std::vector<Slab2> verify_piercing(const ConvexPolygon& poly, const PiercingSet& pierce,
                                   int trials, uint64_t seed, double inflate = 1e-6);

}  // namespace cylt
