#include <doctest.h>

#include <string>

#include "cyltrans/error.hpp"
#include "cyltrans/instances.hpp"
#include "cyltrans/json_io.hpp"
#include "cyltrans/svg.hpp"
#include "cyltrans/transversal.hpp"
#include "helpers.hpp"

using namespace cylt;

namespace {

bool same_cylinders(const std::vector<Cylinder3>& a, const std::vector<Cylinder3>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].direction != b[i].direction || a[i].generators != b[i].generators) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("family files round-trip exactly") {
  for (const GenKind kind : {GenKind::CommonPoint, GenKind::CoplanarLines, GenKind::Stack}) {
    GenSpec spec;
    spec.kind = kind;
    spec.n = 9;
    spec.seed = 31;
    const InstanceFile file = generate_instance(spec);
    const std::string text = instance_to_json(file);
    const InstanceFile back = instance_from_json(text);
    CHECK(back.kind == FileKind::Family);
    CHECK(same_cylinders(file.cylinders, back.cylinders));
    CHECK(instance_to_json(back) == text);
  }
}

TEST_CASE("bipartite and rounded files round-trip exactly") {
  GenSpec hyper;
  hyper.kind = GenKind::Hyperboloid;
  hyper.n = 6;
  hyper.seed = 2;
  const InstanceFile hfile = generate_instance(hyper);
  const InstanceFile hback = instance_from_json(instance_to_json(hfile));
  CHECK(hback.kind == FileKind::Bipartite);
  CHECK(same_cylinders(hfile.f, hback.f));
  CHECK(same_cylinders(hfile.g, hback.g));

  GenSpec rounded;
  rounded.kind = GenKind::Rounded;
  rounded.n = 7;
  rounded.seed = 3;
  rounded.D = 2.0;
  const InstanceFile rfile = generate_instance(rounded);
  const InstanceFile rback = instance_from_json(instance_to_json(rfile));
  CHECK(rback.kind == FileKind::Rounded);
  CHECK(rback.D == 2.0);
  REQUIRE(rback.bodies.size() == rfile.bodies.size());
  for (size_t i = 0; i < rfile.bodies.size(); ++i) {
    CHECK(rfile.bodies[i].center == rback.bodies[i].center);
    CHECK(rfile.bodies[i].r == rback.bodies[i].r);
    CHECK(rfile.bodies[i].R == rback.bodies[i].R);
  }
}

TEST_CASE("reports round-trip through JSON") {
  const std::vector<Cylinder3> fam = gen_common_point(30, 4);
  const TransversalReport rep = solve(fam);
  const std::string text = report_to_json(rep, true);
  const TransversalReport back = report_from_json(text);
  CHECK(back.branch == rep.branch);
  CHECK(back.hits == rep.hits);
  CHECK(back.line.point == rep.line.point);
  CHECK(back.line.direction == rep.line.direction);
  CHECK(back.n == rep.n);
  CHECK(back.bound == rep.bound);
  CHECK(verify_report(fam, back));
}

TEST_CASE("malformed inputs raise parse errors") {
  CHECK_THROWS_AS(instance_from_json("{ not json"), Error);
  CHECK_THROWS_AS(instance_from_json(R"({"kind":"family","cylinders":[]})"), Error);
  CHECK_THROWS_AS(instance_from_json(R"({"kind":"blob"})"), Error);
  CHECK_THROWS_AS(
      instance_from_json(R"({"kind":"family","cylinders":[{"direction":[0,0,1]}]})"), Error);
  CHECK_THROWS_AS(report_from_json(R"({"kind":"transversal_report"})"), Error);
  CHECK_THROWS_AS(polygon_from_json(R"({"kind":"polygon"})"), Error);
}

TEST_CASE("polygon files canonicalize on load") {
  const std::string text = R"({"kind":"polygon","vertices":[[1,1],[0,0],[1,0],[0.5,0.25],[0,1]]})";
  const ConvexPolygon poly = polygon_from_json(text);
  CHECK(poly.size() == 4);
  CHECK(is_canonical(poly));
  const ConvexPolygon again = polygon_from_json(polygon_to_json(poly));
  CHECK(again == poly);
}

TEST_CASE("svg output is deterministic and structured") {
  SplitMix64 rng(404);
  const ConvexPolygon poly = test_helpers::random_polygon(rng, 5, 12);
  const PiercingSet pierce = piercing_points(poly);
  const std::string a = render_piercing_svg(poly, pierce, {});
  const std::string b = render_piercing_svg(poly, pierce, {});
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.find("<polygon") != std::string::npos);
  CHECK(a.find("<circle") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  // Failure slabs add clipped bands.
  const std::string with_fail =
      render_piercing_svg(poly, pierce, {Slab2{{0.0, 1.0}, 0.0, pierce.width}});
  CHECK(with_fail.find("#e67e22") != std::string::npos);
}
