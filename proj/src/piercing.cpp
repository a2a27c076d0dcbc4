#include "cyltrans/piercing.hpp"

#include <algorithm>
#include <cmath>

#include "cyltrans/error.hpp"
#include "cyltrans/rng.hpp"

namespace cylt {

namespace {

constexpr double kFlatWidth = 1e-12;   // below this the polygon is handled as a segment
constexpr double kCoincideEps = 1e-9;  // anchor coincidence test

// Position of a point on the boundary, for cyclic ordering: edge index plus
// normalized parameter along that edge, wrapped so a vertex belongs to the
// edge it starts.
struct BoundaryPos {
  int edge = 0;
  double t = 0.0;
};

bool pos_less(const BoundaryPos& a, const BoundaryPos& b) {
  return a.edge < b.edge || (a.edge == b.edge && a.t < b.t);
}

BoundaryPos edge_param(const ConvexPolygon& poly, int edge, Vec2 point) {
  const int n = poly.size();
  const Vec2 a = poly.verts[static_cast<size_t>(edge)];
  const Vec2 b = poly.verts[static_cast<size_t>((edge + 1) % n)];
  double t = dot(point - a, b - a) / norm2(b - a);
  t = std::clamp(t, 0.0, 1.0);
  if (t >= 1.0 - 1e-12) return {(edge + 1) % n, 0.0};
  return {edge, t};
}

struct Anchor {
  Vec2 point;
  BoundaryPos pos;
};

Vec2 push_out(Vec2 p, Vec2 outward, double half_width) { return p + half_width * outward; }

void add_unique(std::vector<Vec2>* points, Vec2 p) {
  for (const Vec2& q : *points) {
    if (std::abs(q.x - p.x) <= 1e-12 && std::abs(q.y - p.y) <= 1e-12) return;
  }
  points->push_back(p);
}

}  // namespace

PiercingSet piercing_points(const ConvexPolygon& poly) {
  const int n = poly.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "piercing_points: empty polygon");

  PiercingSet out;

  if (n == 1) {
    const Vec2 v = poly.verts[0];
    out.points = {v};
    out.a = out.b = out.c = out.d = v;
    out.width = 0.0;
    return out;
  }

  const MinWidthResult mw = min_width_slab(poly);
  out.width = mw.width;

  if (mw.width <= kFlatWidth) {
    // Segment case: a slab that meets but does not cross a segment contains an
    // endpoint, so the two endpoints suffice.
    const Vec2 dir = perp(normalized(mw.slab.normal));
    const ExtremePair ends = extreme_points(poly, dir);
    out.points = {ends.min, ends.max};
    out.a = out.b = ends.min;
    out.c = out.d = ends.max;
    return out;
  }

  const Vec2 nrm = normalized(mw.slab.normal);
  const double mid = 0.5 * (mw.slab.lo + mw.slab.hi);

  // Midline through the slab; it passes through the interior, so it cuts the
  // boundary in exactly two points.
  LineClip clip;
  if (!clip_line_to_polygon(mid * nrm, perp(nrm), poly, &clip)) {
    throw Error(ErrorCode::Internal, "piercing_points: midline missed the polygon");
  }
  Vec2 a = clip.enter;
  Vec2 c = clip.exit;
  int a_edge = clip.enter_edge;
  int c_edge = clip.exit_edge;
  if (lex_less(c, a)) {
    std::swap(a, c);
    std::swap(a_edge, c_edge);
  }

  // Midline direction oriented from a toward c, so a sits on the min side.
  const Vec2 mdir = normalized(c - a);
  const ExtremePair ext = extreme_points(poly, mdir);
  const double lo_val = dot(ext.min, mdir);
  const double hi_val = dot(ext.max, mdir);

  const bool b_is_a = dot(a, mdir) <= lo_val + kCoincideEps;
  const bool d_is_c = dot(c, mdir) >= hi_val - kCoincideEps;
  out.a = a;
  out.b = b_is_a ? a : ext.min;
  out.c = c;
  out.d = d_is_c ? c : ext.max;

  std::vector<Anchor> anchors;
  anchors.push_back({a, edge_param(poly, a_edge, a)});
  anchors.push_back({c, edge_param(poly, c_edge, c)});
  if (!b_is_a) anchors.push_back({ext.min, BoundaryPos{ext.min_index, 0.0}});
  if (!d_is_c) anchors.push_back({ext.max, BoundaryPos{ext.max_index, 0.0}});
  std::sort(anchors.begin(), anchors.end(),
            [](const Anchor& x, const Anchor& y) { return pos_less(x.pos, y.pos); });

  for (const Anchor& anc : anchors) add_unique(&out.points, anc.point);

  // One rectangle per boundary arc between consecutive anchors. The chain from
  // p counterclockwise to q lies right of the directed chord p -> q, so the
  // outward normal is the clockwise perpendicular of the chord.
  const double half = 0.5 * mw.width;
  const size_t k = anchors.size();
  for (size_t i = 0; i < k; ++i) {
    const Vec2 p = anchors[i].point;
    const Vec2 q = anchors[(i + 1) % k].point;
    const Vec2 chord = q - p;
    if (norm(chord) <= 1e-12) continue;
    const Vec2 outward = normalized(Vec2{chord.y, -chord.x});
    PiercingSet::Rectangle rect;
    rect.p = p;
    rect.q = q;
    rect.outward = outward;
    rect.out_p = push_out(p, outward, half);
    rect.out_q = push_out(q, outward, half);
    out.rectangles.push_back(rect);
    add_unique(&out.points, rect.out_q);  // e over the arc's far chord end
    add_unique(&out.points, rect.out_p);  // f over the near end
  }

  if (out.points.size() > 12) {
    throw Error(ErrorCode::Internal, "piercing_points: more than 12 points");
  }
  return out;
}

std::vector<Slab2> verify_piercing(const ConvexPolygon& poly, const PiercingSet& pierce,
                                   int trials, uint64_t seed, double inflate) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "verify_piercing: trials must be >= 1");
  SplitMix64 rng(seed);
  const double w = pierce.width;
  const double spread = std::max(polygon_diameter(poly), 1.0);
  std::vector<Slab2> failures;

  for (int trial = 0; trial < trials; ++trial) {
    Slab2 slab;
    Vec2 n{1.0, 0.0};
    bool accepted = false;
    for (int attempt = 0; attempt < 10000 && !accepted; ++attempt) {
      const double theta = rng.uniform() * 3.14159265358979323846;
      n = Vec2{std::cos(theta), std::sin(theta)};
      // Half the samples at the critical width w, the rest wider.
      const double width = rng.uniform() < 0.5 ? w : w + rng.uniform() * 0.5 * spread;
      const auto [m, M] = extent_along(poly, n);
      const double c = (m - width) + rng.uniform() * ((M - m) + width);
      slab = Slab2{n, c, c + width};
      accepted = classify_slab(poly, slab) == SlabRelation::Meets;
    }
    if (!accepted) {
      throw Error(ErrorCode::Internal, "verify_piercing: slab sampler starved");
    }
    bool pierced = false;
    for (const Vec2& t : pierce.points) {
      const double d = dot(t, n);
      if (d >= slab.lo - inflate && d <= slab.hi + inflate) {
        pierced = true;
        break;
      }
    }
    if (!pierced) failures.push_back(slab);
  }
  return failures;
}

}  // namespace cylt
