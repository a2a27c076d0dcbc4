#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cyltrans/error.hpp"
#include "cyltrans/piercing.hpp"
#include "cyltrans/rng.hpp"
#include "helpers.hpp"

using namespace cylt;
using test_helpers::near;

namespace {

bool contains_point(const std::vector<Vec2>& pts, Vec2 p, double tol = 1e-9) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](Vec2 q) { return near(q, p, tol); });
}

ConvexPolygon regular_ngon(int k, double radius) {
  std::vector<Vec2> pts;
  for (int i = 0; i < k; ++i) {
    const double theta = 2.0 * test_helpers::kPi * i / k;
    pts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("segment piercing set is its endpoints") {
  const ConvexPolygon seg = convex_hull({{0, 0}, {2, 0}});
  const PiercingSet t = piercing_points(seg);
  REQUIRE(t.points.size() == 2);
  CHECK(contains_point(t.points, {0, 0}));
  CHECK(contains_point(t.points, {2, 0}));
  CHECK(verify_piercing(seg, t, 10000, 11).empty());
}

TEST_CASE("single point piercing set") {
  const PiercingSet t = piercing_points(convex_hull({{3, 3}}));
  REQUIRE(t.points.size() == 1);
  CHECK(t.points[0] == Vec2{3, 3});
}

TEST_CASE("unit square piercing set is the documented 6 points") {
  const ConvexPolygon square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const PiercingSet t = piercing_points(square);
  REQUIRE(t.points.size() == 6);
  CHECK(contains_point(t.points, {0, 0.5}));
  CHECK(contains_point(t.points, {1, 0.5}));
  CHECK(contains_point(t.points, {0, 0}));
  CHECK(contains_point(t.points, {1, 0}));
  CHECK(contains_point(t.points, {0, 1}));
  CHECK(contains_point(t.points, {1, 1}));
  // b and d collapse onto the midline anchors for the square.
  CHECK(near(t.b, t.a));
  CHECK(near(t.d, t.c));
  CHECK(verify_piercing(square, t, 10000, 7).empty());
}

TEST_CASE("regular 12-gon stays within 12 points and pierces every sample") {
  const ConvexPolygon gon = regular_ngon(12, 1.0);
  const PiercingSet t = piercing_points(gon);
  CHECK(t.points.size() <= 12);
  CHECK(verify_piercing(gon, t, 10000, 13).empty());
}

TEST_CASE("removing a corner breaks the square's piercing set") {
  const ConvexPolygon square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  PiercingSet t = piercing_points(square);
  t.points.erase(std::remove_if(t.points.begin(), t.points.end(),
                                [](Vec2 p) { return near(p, Vec2{0, 0}); }),
                 t.points.end());
  const std::vector<Slab2> failures = verify_piercing(square, t, 10000, 7);
  CHECK_FALSE(failures.empty());
  // Every failing slab must be one that only the removed corner pierced.
  for (const Slab2& s : failures) {
    const double d = dot(Vec2{0, 0}, normalized(s.normal));
    CHECK(d >= s.lo - 1e-6);
    CHECK(d <= s.hi + 1e-6);
  }
}

TEST_CASE("anchors sit on the midline and rectangles at half width") {
  SplitMix64 rng(202);
  for (int iter = 0; iter < 40; ++iter) {
    const ConvexPolygon poly = test_helpers::random_polygon(rng, 3, 32);
    const MinWidthResult mw = min_width_slab(poly);
    const PiercingSet t = piercing_points(poly);
    REQUIRE(t.width == mw.width);
    const Vec2 n = normalized(mw.slab.normal);
    const double mid = 0.5 * (mw.slab.lo + mw.slab.hi);
    CHECK(near(dot(t.a, n), mid, 1e-9));
    CHECK(near(dot(t.c, n), mid, 1e-9));
    CHECK(std::abs(dot(t.a - t.c, n)) <= 1e-9);
    for (const PiercingSet::Rectangle& rect : t.rectangles) {
      // out_p/out_q sit exactly w/2 beyond the chord, on the arc side.
      const Vec2 chord_n = rect.outward;
      CHECK(near(dot(rect.out_p - rect.p, chord_n), 0.5 * t.width, 1e-9));
      CHECK(near(dot(rect.out_q - rect.q, chord_n), 0.5 * t.width, 1e-9));
    }
    CHECK(t.points.size() <= 12);
  }
}

TEST_CASE("piercing sets scale with the polygon") {
  SplitMix64 rng(203);
  for (double lambda : {0.5, 3.0}) {
    for (int iter = 0; iter < 10; ++iter) {
      const ConvexPolygon poly = test_helpers::random_polygon(rng, 4, 16);
      std::vector<Vec2> scaled_pts;
      for (const Vec2& v : poly.verts) scaled_pts.push_back(lambda * v);
      const ConvexPolygon scaled = convex_hull(scaled_pts);
      const PiercingSet t = piercing_points(poly);
      const PiercingSet ts = piercing_points(scaled);
      REQUIRE(t.points.size() == ts.points.size());
      CHECK(near(ts.width, lambda * t.width, 1e-9 * lambda));
      for (const Vec2& p : t.points) {
        CHECK(contains_point(ts.points, lambda * p, 1e-7 * lambda));
      }
    }
  }
}

TEST_CASE("sampled piercing property over random polygons") {
  SplitMix64 rng(204);
  for (int iter = 0; iter < 20; ++iter) {
    const ConvexPolygon poly = test_helpers::random_polygon(rng, 3, 64);
    const PiercingSet t = piercing_points(poly);
    CHECK(t.points.size() <= 12);
    CHECK(verify_piercing(poly, t, 2000, 1000 + static_cast<uint64_t>(iter)).empty());
  }
}

TEST_CASE("verify_piercing rejects bad trial counts") {
  const ConvexPolygon square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK_THROWS_AS(verify_piercing(square, piercing_points(square), 0, 1), Error);
}
