#include "cyltrans/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cyltrans/error.hpp"
#include "cyltrans/rng.hpp"

namespace cylt {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 random_unit(SplitMix64& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

// Strictly convex polygon: jittered equally spaced angles on an ellipse. The
// jitter never exceeds 40% of a step, so angular gaps stay bounded away from
// zero and no three vertices come close to collinear. Recentered on the
// vertex mean, so a cylinder's generator centroid sits on its center line.
std::vector<Vec2> random_section(SplitMix64& rng, int min_verts, int max_verts,
                                 double rmin, double rmax) {
  const int k = min_verts + static_cast<int>(rng.below(static_cast<uint64_t>(max_verts - min_verts + 1)));
  const double rx = rng.uniform(rmin, rmax);
  const double ry = rng.uniform(rmin, rmax);
  const double phase = rng.uniform(0.0, 2.0 * kPi);
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(k));
  Vec2 mean{0.0, 0.0};
  for (int i = 0; i < k; ++i) {
    const double theta = phase + 2.0 * kPi * (i + 0.3 + 0.4 * rng.uniform()) / k;
    pts.push_back({rx * std::cos(theta), ry * std::sin(theta)});
    mean = mean + (1.0 / k) * pts.back();
  }
  for (Vec2& p : pts) p = p - mean;
  return pts;
}

// Lightly jittered regular polygon on a circle: the extent along any
// direction stays within a few percent of the diameter.
std::vector<Vec2> near_regular_section(SplitMix64& rng, int verts, double radius) {
  const double phase = rng.uniform(0.0, 2.0 * kPi);
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(verts));
  for (int i = 0; i < verts; ++i) {
    const double theta = phase + 2.0 * kPi * (i + 0.45 + 0.1 * rng.uniform()) / verts;
    pts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  return pts;
}

// Cylinder through `center` with the given cross-section offsets placed in the
// plane orthogonal to `direction`; small axial jitter per generator (absorbed
// by the axis line, kept for texture).
Cylinder3 build_cylinder(Vec3 direction, Vec3 center, const std::vector<Vec2>& section,
                         SplitMix64& rng, double axial_spread) {
  const Frame f = make_frame(direction);
  const Vec2 c2 = f.to_plane(center);
  Cylinder3 cyl;
  cyl.direction = direction;
  cyl.generators.reserve(section.size());
  for (const Vec2& s : section) {
    const double t = axial_spread > 0.0 ? rng.uniform(-axial_spread, axial_spread) : 0.0;
    cyl.generators.push_back(f.from_plane(c2 + s) + t * f.u);
  }
  return cyl;
}

Vec3 distinct_direction(SplitMix64& rng, const std::vector<Vec3>& taken, double min_sin) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Vec3 d = random_unit(rng);
    bool ok = true;
    for (const Vec3& t : taken) {
      if (norm(cross(d, normalized(t))) <= min_sin) {
        ok = false;
        break;
      }
    }
    if (ok) return d;
  }
  throw Error(ErrorCode::GenerationFailed, "could not sample a distinct direction");
}

double line_line_distance(Vec3 p1, Vec3 d1, Vec3 p2, Vec3 d2) {
  const Vec3 n = cross(normalized(d1), normalized(d2));
  const double nn = norm(n);
  if (nn <= 1e-12) {
    const Vec3 rel = p2 - p1;
    return norm(rel - dot(rel, normalized(d1)) * normalized(d1));
  }
  return std::abs(dot(p2 - p1, n)) / nn;
}

double max_pairwise_distance(const std::vector<Vec3>& pts) {
  double best = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t k = i + 1; k < pts.size(); ++k) {
      best = std::max(best, distance(pts[i], pts[k]));
    }
  }
  return best;
}

}  // namespace

CommonPointFamily gen_common_point_with_witness(int n, uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gen_common_point: n must be >= 1");
  SplitMix64 root(seed);
  SplitMix64 rng_point = root.fork(1);
  SplitMix64 rng_dirs = root.fork(2);
  SplitMix64 rng_shape = root.fork(3);

  CommonPointFamily out;
  out.point = {rng_point.uniform(-50.0, 50.0), rng_point.uniform(-50.0, 50.0),
               rng_point.uniform(-50.0, 50.0)};

  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec3 d = distinct_direction(rng_dirs, dirs, 1e-4);
    dirs.push_back(d);
    // Near-regular sections of one common size, placed eccentrically around
    // the hidden point. A shadow then spans another only when their extents
    // differ by more than twice the offset mismatch, which keeps the crossing
    // digraph sparse while every cylinder still holds a fat ball around p.
    // Odd vertex count: antipodal support errors stagger, so the extent
    // along any direction stays within ~1% of the diameter.
    std::vector<Vec2> section = near_regular_section(rng_shape, 11, 1.0);
    const double off_ang = rng_shape.uniform(0.0, 2.0 * kPi);
    const double off = rng_shape.uniform(0.45, 0.65);
    const Vec2 shift{off * std::cos(off_ang), off * std::sin(off_ang)};
    for (Vec2& s : section) s = s + shift;
    out.cylinders.push_back(build_cylinder(d, out.point, section, rng_shape, 3.0));
  }
  return out;
}

std::vector<Cylinder3> gen_common_point(int n, uint64_t seed) {
  return gen_common_point_with_witness(n, seed).cylinders;
}

std::vector<Cylinder3> gen_coplanar_lines(int n, uint64_t seed, double delta) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gen_coplanar_lines: n must be >= 1");
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "gen_coplanar_lines: delta must be > 0");
  SplitMix64 root(seed);
  SplitMix64 rng_angles = root.fork(1);
  SplitMix64 rng_shape = root.fork(3);

  // Lines tangent to a common circle in z = 0 at jittered angles. Tangents at
  // angles a and b cross at parameter r*tan((b-a)/2) along either line, so
  // all crossing points on one line are separated by at least r*gap/2 and no
  // three lines ever come close to sharing a point. The angle range stops
  // short of pi so no crossing lands further than r*cot(0.025) out.
  const double radius = 10.0;
  const double range = kPi - 0.05;
  std::vector<double> angles(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    angles[static_cast<size_t>(i)] = range * (i + 0.3 + 0.4 * rng_angles.uniform()) / n;
  }

  std::vector<Cylinder3> family;
  family.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = angles[static_cast<size_t>(i)];
    const Vec3 dir{-std::sin(a), std::cos(a), 0.0};
    const Vec3 pivot{radius * std::cos(a), radius * std::sin(a), 0.0};
    const std::vector<Vec2> section = random_section(rng_shape, 4, 8, 0.6 * delta, delta);
    family.push_back(build_cylinder(dir, pivot, section, rng_shape, 0.5));
  }
  return family;
}

std::pair<std::vector<Cylinder3>, std::vector<Cylinder3>> gen_hyperboloid(int n_per_side,
                                                                          uint64_t seed,
                                                                          double delta) {
  if (n_per_side < 1) throw Error(ErrorCode::InvalidArgument, "gen_hyperboloid: n must be >= 1");
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "gen_hyperboloid: delta must be > 0");
  SplitMix64 root(seed);
  SplitMix64 rng_f = root.fork(1);
  SplitMix64 rng_g = root.fork(2);
  SplitMix64 rng_shape = root.fork(3);

  const int n = n_per_side;
  std::vector<double> tf(static_cast<size_t>(n)), tg(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    tf[static_cast<size_t>(i)] = 2.0 * kPi * (i + 0.3 + 0.4 * rng_f.uniform()) / n;
  }
  const auto wrap_gap = [](double x) {
    x = std::fmod(std::abs(x), 2.0 * kPi);
    return std::min(x, 2.0 * kPi - x);
  };
  // Opposite-ruling lines meet unless the angles are antipodal; keep every
  // cross pair clear of that parallel configuration. The exclusion margin
  // shrinks with n so the forbidden zones never swallow the circle.
  const double antipodal_margin = std::min(0.1, 0.3 * kPi / n);
  for (int j = 0; j < n; ++j) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      const double cand = attempt == 0
                              ? 2.0 * kPi * (j + 0.3 + 0.4 * rng_g.uniform()) / n
                              : rng_g.uniform(0.0, 2.0 * kPi);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (wrap_gap(tf[static_cast<size_t>(i)] - cand - kPi) < antipodal_margin) ok = false;
      }
      for (int i = 0; i < j && ok; ++i) {
        if (wrap_gap(tg[static_cast<size_t>(i)] - cand) < 0.25 * 2.0 * kPi / n) ok = false;
      }
      if (ok) {
        tg[static_cast<size_t>(j)] = cand;
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorCode::GenerationFailed, "gen_hyperboloid: angle resampling exhausted");
  }

  const auto ruling = [&](double theta, double zsign, SplitMix64& rng) {
    const Vec3 base{std::cos(theta), std::sin(theta), 0.0};
    const Vec3 dir = normalized(Vec3{-std::sin(theta), std::cos(theta), zsign});
    const std::vector<Vec2> section = random_section(rng, 4, 8, 0.5 * delta, delta);
    return build_cylinder(dir, base, section, rng, 0.5);
  };

  std::vector<Cylinder3> f, g;
  f.reserve(static_cast<size_t>(n));
  g.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) f.push_back(ruling(tf[static_cast<size_t>(i)], 1.0, rng_shape));
  for (int j = 0; j < n; ++j) g.push_back(ruling(tg[static_cast<size_t>(j)], -1.0, rng_shape));

  // Every cross pair's center lines must touch (within delta/2) so the
  // thickened cylinders intersect with margin.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec3 pf{std::cos(tf[static_cast<size_t>(i)]), std::sin(tf[static_cast<size_t>(i)]), 0.0};
      const Vec3 pg{std::cos(tg[static_cast<size_t>(j)]), std::sin(tg[static_cast<size_t>(j)]), 0.0};
      if (line_line_distance(pf, f[static_cast<size_t>(i)].direction, pg,
                             g[static_cast<size_t>(j)].direction) > 0.5 * delta) {
        throw Error(ErrorCode::GenerationFailed, "gen_hyperboloid: cross pair too far apart");
      }
    }
  }
  return {std::move(f), std::move(g)};
}

std::vector<Cylinder3> gen_stack(int n, uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "gen_stack: n must be >= 2");
  SplitMix64 root(seed);
  SplitMix64 rng_dirs = root.fork(1);
  SplitMix64 rng_shape = root.fork(2);

  std::vector<Cylinder3> family;
  family.reserve(static_cast<size_t>(n));

  const Vec3 needle_dir = normalized(
      Vec3{1.0, 1e-3 * rng_dirs.uniform(-1.0, 1.0), 1e-3 * rng_dirs.uniform(-1.0, 1.0)});
  family.push_back(build_cylinder(needle_dir, Vec3{0.0, 0.0, 0.0},
                                  random_section(rng_shape, 5, 8, 0.03, 0.06), rng_shape, 1.0));

  // Wide cylinders with near-orthogonal axes stationed along the needle; each
  // one's cross-section dwarfs the needle's shadow, so every one severs it.
  const int slabs = n - 1;
  for (int i = 0; i < slabs; ++i) {
    const double x = -40.0 + 80.0 * (i + 0.5) / slabs + 0.02 * rng_dirs.uniform(-1.0, 1.0);
    const double phi = kPi * (i + 0.3 + 0.4 * rng_dirs.uniform()) / slabs;
    const Vec3 dir = normalized(
        Vec3{0.02 * rng_dirs.uniform(-1.0, 1.0), std::cos(phi), std::sin(phi)});
    const std::vector<Vec2> section = random_section(rng_shape, 6, 10, 50.0, 55.0);
    family.push_back(build_cylinder(dir, Vec3{x, 0.0, 0.0}, section, rng_shape, 0.5));
  }
  return family;
}

std::vector<RoundedBody> gen_rounded(int n, double D, uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gen_rounded: n must be >= 1");
  if (!(D >= 1.0)) throw Error(ErrorCode::InvalidArgument, "gen_rounded: D must be >= 1");
  SplitMix64 rng(seed);
  const double reach = 0.45 * (D + 1.0);
  std::vector<RoundedBody> bodies;
  bodies.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    RoundedBody b;
    b.r = rng.uniform(1.0, 2.0);
    const double slack = std::max(0.0, 0.999 * D - 1.0);
    b.R = b.r * (1.0 + slack * rng.uniform());
    const Vec3 dir = random_unit(rng);
    b.center = std::cbrt(rng.uniform()) * reach * dir;
    bodies.push_back(b);
  }
  return bodies;
}

std::vector<Cylinder3> generate_family(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::CommonPoint:
      return gen_common_point(spec.n, spec.seed);
    case GenKind::CoplanarLines:
      return gen_coplanar_lines(spec.n, spec.seed,
                                spec.delta > 0.0 ? spec.delta : kCoplanarDefaultDelta);
    case GenKind::Stack:
      return gen_stack(spec.n, spec.seed);
    default:
      throw Error(ErrorCode::InvalidArgument, "generate_family: kind is not a single family");
  }
}

namespace {

struct OccupancyGrid {
  int res;
  std::vector<uint8_t> kept;

  size_t idx(int ix, int iy, int it) const {
    return (static_cast<size_t>(ix) * static_cast<size_t>(res) + static_cast<size_t>(iy)) *
               static_cast<size_t>(res) +
           static_cast<size_t>(it);
  }
};

// Multi-source flood from the bottom t-layer; true iff the top layer is reached.
bool bottom_reaches_top(const OccupancyGrid& grid) {
  const int res = grid.res;
  std::vector<uint8_t> seen(grid.kept.size(), 0);
  std::vector<size_t> stack;
  for (int ix = 0; ix < res; ++ix) {
    for (int iy = 0; iy < res; ++iy) {
      const size_t id = grid.idx(ix, iy, 0);
      if (grid.kept[id]) {
        seen[id] = 1;
        stack.push_back(id);
      }
    }
  }
  const size_t plane = static_cast<size_t>(res) * static_cast<size_t>(res);
  while (!stack.empty()) {
    const size_t id = stack.back();
    stack.pop_back();
    const int it = static_cast<int>(id % static_cast<size_t>(res));
    const int iy = static_cast<int>((id / static_cast<size_t>(res)) % static_cast<size_t>(res));
    const int ix = static_cast<int>(id / plane);
    if (it == res - 1) return true;
    const auto visit = [&](int jx, int jy, int jt) {
      if (jx < 0 || jy < 0 || jt < 0 || jx >= res || jy >= res || jt >= res) return;
      const size_t jid = grid.idx(jx, jy, jt);
      if (grid.kept[jid] && !seen[jid]) {
        seen[jid] = 1;
        stack.push_back(jid);
      }
    };
    visit(ix + 1, iy, it);
    visit(ix - 1, iy, it);
    visit(ix, iy + 1, it);
    visit(ix, iy - 1, it);
    visit(ix, iy, it + 1);
    visit(ix, iy, it - 1);
  }
  return false;
}

}  // namespace

bool mc_crossing_oracle(const Cylinder3& a, const Cylinder3& b, int resolution, uint64_t seed) {
  validate_cylinder(a);
  validate_cylinder(b);
  if (resolution < 2) {
    throw Error(ErrorCode::InsufficientResolution, "mc_crossing_oracle: resolution too coarse");
  }
  const Frame fa = make_frame(a.direction);
  const ConvexPolygon ka = std::get<ConvexPolygon>(shadow(a, fa));
  const Frame fb = make_frame(b.direction);
  const ConvexPolygon kb = std::get<ConvexPolygon>(shadow(b, fb));

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const Vec2& v : ka.verts) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const double span_x = std::max(max_x - min_x, 1e-9);
  const double span_y = std::max(max_y - min_y, 1e-9);

  SplitMix64 rng(seed);
  const double jx = rng.uniform(-0.25, 0.25);
  const double jy = rng.uniform(-0.25, 0.25);
  const double jt = rng.uniform(-0.25, 0.25);

  const int res = resolution;
  const Vec2 ub = fb.to_plane(fa.u);

  // Per-fiber cut interval: the exact t-range where the fiber lies inside b.
  struct Cut {
    bool in_a = false;
    bool in_b = false;
    double t0 = 0.0, t1 = 0.0;
  };
  std::vector<Cut> cuts(static_cast<size_t>(res) * static_cast<size_t>(res));
  double t_min = std::numeric_limits<double>::infinity();
  double t_max = -t_min;
  bool any_cut = false;

  for (int ix = 0; ix < res; ++ix) {
    const double x = min_x + (ix + 0.5 + jx) * span_x / res;
    for (int iy = 0; iy < res; ++iy) {
      const double y = min_y + (iy + 0.5 + jy) * span_y / res;
      Cut& cut = cuts[static_cast<size_t>(ix) * static_cast<size_t>(res) + static_cast<size_t>(iy)];
      const Vec2 p2{x, y};
      cut.in_a = point_in_polygon(ka, p2, 0.0);
      if (!cut.in_a) continue;
      if (kb.size() < 3) continue;  // flat b has no volume to remove
      const Vec2 pb = fb.to_plane(fa.from_plane(p2));
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      bool empty = false;
      const int m = kb.size();
      for (int e = 0; e < m && !empty; ++e) {
        const Vec2 va = kb.verts[static_cast<size_t>(e)];
        const Vec2 vb = kb.verts[static_cast<size_t>((e + 1) % m)];
        const Vec2 nin = perp(vb - va);
        const double denom = dot(ub, nin);
        const double numer = dot(va - pb, nin);
        if (denom == 0.0) {
          if (numer > 0.0) empty = true;
          continue;
        }
        const double t = numer / denom;
        if (denom > 0.0) {
          lo = std::max(lo, t);
        } else {
          hi = std::min(hi, t);
        }
      }
      if (!empty && lo <= hi && std::isfinite(lo) && std::isfinite(hi)) {
        cut.in_b = true;
        cut.t0 = lo;
        cut.t1 = hi;
        t_min = std::min(t_min, lo);
        t_max = std::max(t_max, hi);
        any_cut = true;
      }
    }
  }

  if (!any_cut) return false;  // b misses every sampled fiber of a

  const double pad = 3.0 * std::max(max_pairwise_distance(b.generators), 1e-6);
  const double t_lo = t_min - pad;
  const double t_span = (t_max - t_min) + 2.0 * pad;

  OccupancyGrid grid{res, std::vector<uint8_t>(
                              static_cast<size_t>(res) * static_cast<size_t>(res) * static_cast<size_t>(res), 0)};
  size_t kept_count = 0;
  for (int ix = 0; ix < res; ++ix) {
    for (int iy = 0; iy < res; ++iy) {
      const Cut& cut = cuts[static_cast<size_t>(ix) * static_cast<size_t>(res) + static_cast<size_t>(iy)];
      if (!cut.in_a) continue;
      for (int it = 0; it < res; ++it) {
        const double t = t_lo + (it + 0.5 + jt) * t_span / res;
        const bool removed = cut.in_b && t >= cut.t0 && t <= cut.t1;
        if (!removed) {
          grid.kept[grid.idx(ix, iy, it)] = 1;
          ++kept_count;
        }
      }
    }
  }
  if (kept_count < 100) {
    throw Error(ErrorCode::InsufficientResolution, "mc_crossing_oracle: fewer than 100 kept samples");
  }
  return !bottom_reaches_top(grid);
}

bool mc_slab_crossing_2d(const ConvexPolygon& poly, const Slab2& slab, int resolution, uint64_t seed) {
  if (resolution < 2) {
    throw Error(ErrorCode::InsufficientResolution, "mc_slab_crossing_2d: resolution too coarse");
  }
  const Vec2 n = normalized(slab.normal);
  const Vec2 m = perp(n);
  const auto [t_lo_poly, t_hi_poly] = extent_along(poly, m);
  const double pad = std::max(polygon_diameter(poly), slab.width()) + 1.0;
  const double t_lo = t_lo_poly - pad;
  const double t_span = (t_hi_poly - t_lo_poly) + 2.0 * pad;
  const double s_span = std::max(slab.width(), 1e-9);

  SplitMix64 rng(seed);
  const double js = rng.uniform(-0.25, 0.25);
  const double jt = rng.uniform(-0.25, 0.25);

  const int res = resolution;
  std::vector<uint8_t> kept(static_cast<size_t>(res) * static_cast<size_t>(res), 0);
  size_t kept_count = 0;
  for (int is = 0; is < res; ++is) {
    const double s = slab.lo + (is + 0.5 + js) * s_span / res;
    for (int it = 0; it < res; ++it) {
      const double t = t_lo + (it + 0.5 + jt) * t_span / res;
      const Vec2 p = s * n + t * m;
      if (!point_in_polygon(poly, p, 0.0)) {
        kept[static_cast<size_t>(is) * static_cast<size_t>(res) + static_cast<size_t>(it)] = 1;
        ++kept_count;
      }
    }
  }
  if (kept_count < 100) {
    throw Error(ErrorCode::InsufficientResolution, "mc_slab_crossing_2d: fewer than 100 kept samples");
  }

  // Flood from the low-t side of the slab; crossing means the far side is cut off.
  std::vector<uint8_t> seen(kept.size(), 0);
  std::vector<size_t> stack;
  for (int is = 0; is < res; ++is) {
    const size_t id = static_cast<size_t>(is) * static_cast<size_t>(res);
    if (kept[id]) {
      seen[id] = 1;
      stack.push_back(id);
    }
  }
  while (!stack.empty()) {
    const size_t id = stack.back();
    stack.pop_back();
    const int it = static_cast<int>(id % static_cast<size_t>(res));
    const int is = static_cast<int>(id / static_cast<size_t>(res));
    if (it == res - 1) return false;
    const auto visit = [&](int ns, int nt) {
      if (ns < 0 || nt < 0 || ns >= res || nt >= res) return;
      const size_t nid = static_cast<size_t>(ns) * static_cast<size_t>(res) + static_cast<size_t>(nt);
      if (kept[nid] && !seen[nid]) {
        seen[nid] = 1;
        stack.push_back(nid);
      }
    };
    visit(is + 1, it);
    visit(is - 1, it);
    visit(is, it + 1);
    visit(is, it - 1);
  }
  return true;
}

}  // namespace cylt
