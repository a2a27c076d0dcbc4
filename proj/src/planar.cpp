#include "cyltrans/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyltrans/error.hpp"

namespace cylt {

namespace {

constexpr double kTinyNorm = 1e-300;

Vec2 require_unit(Vec2 v, const char* what) {
  const double n = norm(v);
  if (!(n > kTinyNorm) || !is_finite(v)) {
    throw Error(ErrorCode::ZeroDirection, std::string(what) + ": direction must be nonzero");
  }
  return {v.x / n, v.y / n};
}

// Flip so the normal compares lexicographically positive: y > 0, or y == 0 and x > 0.
bool needs_flip(Vec2 n) { return n.y < 0.0 || (n.y == 0.0 && n.x < 0.0); }

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = norm2(ab);
  if (len2 == 0.0) return distance(p, a);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

bool segments_properly_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double o1 = cross(b - a, c - a);
  const double o2 = cross(b - a, d - a);
  const double o3 = cross(d - c, a - c);
  const double o4 = cross(d - c, b - c);
  return ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0)) &&
         ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0));
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_properly_cross(a, b, c, d)) return 0.0;
  return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                  std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

}  // namespace

ConvexPolygon convex_hull(const std::vector<Vec2>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "convex_hull: empty point set");
  for (const Vec2& p : points) {
    if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "convex_hull: non-finite coordinate");
  }
  std::vector<Vec2> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const size_t m = pts.size();
  if (m == 1) return ConvexPolygon{{pts[0]}};

  // Monotone chain; collinear points are dropped so turns stay strict.
  std::vector<Vec2> hull(2 * m);
  size_t k = 0;
  for (size_t i = 0; i < m; ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower_end = k + 1;
  for (size_t i = m - 1; i-- > 0;) {
    while (k >= lower_end && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return ConvexPolygon{std::move(hull)};
}

bool is_canonical(const ConvexPolygon& poly) {
  const int n = poly.size();
  if (n == 0) return false;
  for (const Vec2& v : poly.verts) {
    if (!is_finite(v)) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (i > 0 && poly.verts[static_cast<size_t>(i)] == poly.verts[static_cast<size_t>(i - 1)]) return false;
    if (lex_less(poly.verts[static_cast<size_t>(i)], poly.verts[0])) return false;
  }
  if (n >= 3) {
    for (int i = 0; i < n; ++i) {
      const Vec2 a = poly.verts[static_cast<size_t>(i)];
      const Vec2 b = poly.verts[static_cast<size_t>((i + 1) % n)];
      const Vec2 c = poly.verts[static_cast<size_t>((i + 2) % n)];
      if (cross(b - a, c - b) <= 0.0) return false;
    }
  }
  return true;
}

std::pair<double, double> extent_along(const ConvexPolygon& poly, Vec2 unit_dir) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Vec2& v : poly.verts) {
    const double d = dot(v, unit_dir);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

MinWidthResult min_width_slab(const ConvexPolygon& poly) {
  const int n = poly.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "min_width_slab: empty polygon");

  if (n == 1) {
    Slab2 s{{0.0, 1.0}, poly.verts[0].y, poly.verts[0].y};
    return {s, 0.0, 0};
  }
  if (n == 2) {
    Vec2 nrm = normalized(perp(poly.verts[1] - poly.verts[0]));
    if (needs_flip(nrm)) nrm = -nrm;
    const double c = dot(poly.verts[0], nrm);
    return {Slab2{nrm, c, c}, 0.0, 0};
  }

  const auto vert = [&](int i) { return poly.verts[static_cast<size_t>(((i % n) + n) % n)]; };

  // Rotating calipers: the antipodal vertex advances monotonically with the edge.
  const Vec2 n0 = normalized(perp(vert(1) - vert(0)));  // inward for a ccw polygon
  int j = 0;
  double dbest = -1.0;
  for (int k = 0; k < n; ++k) {
    const double d = dot(vert(k) - vert(0), n0);
    if (d > dbest) {
      dbest = d;
      j = k;
    }
  }

  int best_edge = 0;
  int best_vertex = j;
  double best_width = std::numeric_limits<double>::infinity();
  int advances = 0;
  for (int i = 0; i < n; ++i) {
    const Vec2 a = vert(i);
    const Vec2 nin = normalized(perp(vert(i + 1) - a));
    while (advances <= 2 * n && dot(vert(j + 1) - a, nin) > dot(vert(j) - a, nin)) {
      j = (j + 1) % n;
      ++advances;
    }
    const double w = dot(vert(j) - a, nin);
    if (w < best_width) {
      best_width = w;
      best_edge = i;
      best_vertex = j;
    }
  }
  (void)best_vertex;

  Vec2 nrm = normalized(perp(vert(best_edge + 1) - vert(best_edge)));
  if (needs_flip(nrm)) nrm = -nrm;
  const auto [lo, hi] = extent_along(poly, nrm);
  return {Slab2{nrm, lo, hi}, best_width, best_edge};
}

SlabRelation classify_slab(const ConvexPolygon& poly, const Slab2& slab, double eps) {
  const Vec2 n = require_unit(slab.normal, "classify_slab");
  const auto [m, M] = extent_along(poly, n);
  if (M < slab.lo - eps || m > slab.hi + eps) return SlabRelation::Disjoint;
  const bool meets_lo = slab.lo >= m - eps && slab.lo <= M + eps;
  const bool meets_hi = slab.hi >= m - eps && slab.hi <= M + eps;
  return (meets_lo && meets_hi) ? SlabRelation::Crosses : SlabRelation::Meets;
}

ExtremePair extreme_points(const ConvexPolygon& poly, Vec2 dir) {
  if (!(norm(dir) > kTinyNorm) || !is_finite(dir)) {
    throw Error(ErrorCode::ZeroDirection, "extreme_points: zero direction");
  }
  if (poly.size() == 0) throw Error(ErrorCode::EmptyInput, "extreme_points: empty polygon");
  ExtremePair out{poly.verts[0], poly.verts[0], 0, 0};
  double vmin = dot(poly.verts[0], dir);
  double vmax = vmin;
  for (int i = 1; i < poly.size(); ++i) {
    const Vec2 v = poly.verts[static_cast<size_t>(i)];
    const double d = dot(v, dir);
    if (d < vmin || (d == vmin && lex_less(v, out.min))) {
      vmin = d;
      out.min = v;
      out.min_index = i;
    }
    if (d > vmax || (d == vmax && lex_less(v, out.max))) {
      vmax = d;
      out.max = v;
      out.max_index = i;
    }
  }
  return out;
}

bool line_hits_polygon(Vec2 point, Vec2 dir, const ConvexPolygon& poly, double eps) {
  const Vec2 n = require_unit(perp(dir), "line_hits_polygon");
  const double c = dot(point, n);
  const auto [m, M] = extent_along(poly, n);
  return c >= m - eps && c <= M + eps;
}

bool point_in_polygon(const ConvexPolygon& poly, Vec2 p, double eps) {
  const int n = poly.size();
  if (n == 0) return false;
  if (n == 1) return distance(p, poly.verts[0]) <= eps;
  if (n == 2) return point_segment_distance(p, poly.verts[0], poly.verts[1]) <= eps;
  for (int i = 0; i < n; ++i) {
    const Vec2 a = poly.verts[static_cast<size_t>(i)];
    const Vec2 b = poly.verts[static_cast<size_t>((i + 1) % n)];
    const double signed_dist = cross(b - a, p - a) / norm(b - a);
    if (signed_dist < -eps) return false;
  }
  return true;
}

bool convex_polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b, double eps) {
  for (const Vec2& v : a.verts) {
    if (point_in_polygon(b, v, eps)) return true;
  }
  for (const Vec2& v : b.verts) {
    if (point_in_polygon(a, v, eps)) return true;
  }
  const int na = a.size();
  const int nb = b.size();
  if (na < 2 || nb < 2) return false;
  for (int i = 0; i < na; ++i) {
    const Vec2 p0 = a.verts[static_cast<size_t>(i)];
    const Vec2 p1 = a.verts[static_cast<size_t>((i + 1) % na)];
    if (na == 2 && i == 1) break;
    for (int k = 0; k < nb; ++k) {
      const Vec2 q0 = b.verts[static_cast<size_t>(k)];
      const Vec2 q1 = b.verts[static_cast<size_t>((k + 1) % nb)];
      if (nb == 2 && k == 1) break;
      if (segment_segment_distance(p0, p1, q0, q1) <= eps) return true;
    }
  }
  return false;
}

bool clip_line_to_polygon(Vec2 p0, Vec2 dir, const ConvexPolygon& poly, LineClip* out) {
  const int n = poly.size();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "clip_line_to_polygon: polygon without interior");
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  int edge_lo = -1, edge_hi = -1;
  for (int i = 0; i < n; ++i) {
    const Vec2 a = poly.verts[static_cast<size_t>(i)];
    const Vec2 b = poly.verts[static_cast<size_t>((i + 1) % n)];
    const Vec2 nin = perp(b - a);  // inward
    const double denom = dot(dir, nin);
    const double numer = dot(a - p0, nin);
    if (denom == 0.0) {
      if (numer > 0.0) return false;  // line outside this half-plane
      continue;
    }
    const double t = numer / denom;
    if (denom > 0.0) {
      if (t > t_lo) {
        t_lo = t;
        edge_lo = i;
      }
    } else {
      if (t < t_hi) {
        t_hi = t;
        edge_hi = i;
      }
    }
  }
  if (!(t_lo <= t_hi) || edge_lo < 0 || edge_hi < 0) return false;
  if (out != nullptr) {
    out->enter = p0 + t_lo * dir;
    out->exit = p0 + t_hi * dir;
    out->enter_edge = edge_lo;
    out->exit_edge = edge_hi;
    out->t_enter = t_lo;
    out->t_exit = t_hi;
  }
  return true;
}

double polygon_diameter(const ConvexPolygon& poly) {
  double best = 0.0;
  for (size_t i = 0; i < poly.verts.size(); ++i) {
    for (size_t k = i + 1; k < poly.verts.size(); ++k) {
      best = std::max(best, distance(poly.verts[i], poly.verts[k]));
    }
  }
  return best;
}

Vec2 vertex_centroid(const ConvexPolygon& poly) {
  Vec2 sum{0.0, 0.0};
  for (const Vec2& v : poly.verts) sum = sum + v;
  return (1.0 / static_cast<double>(poly.size())) * sum;
}

}  // namespace cylt
