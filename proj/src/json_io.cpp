#include "cyltrans/json_io.hpp"

#include <cmath>

#include "cyltrans/error.hpp"
#include "cyltrans/version.hpp"

namespace cylt {

namespace {

using nlohmann::json;

json vec3_to_json(Vec3 v) { return json::array({v.x, v.y, v.z}); }
json vec2_to_json(Vec2 v) { return json::array({v.x, v.y}); }

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorCode::ParseError, std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::ParseError, std::string(what) + ": non-finite number");
  return v;
}

Vec3 vec3_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": expected [x, y, z]");
  }
  return {number_at(j[0], what), number_at(j[1], what), number_at(j[2], what)};
}

Vec2 vec2_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": expected [x, y]");
  }
  return {number_at(j[0], what), number_at(j[1], what)};
}

json cylinder_to_json(const Cylinder3& c) {
  json gens = json::array();
  for (const Vec3& g : c.generators) gens.push_back(vec3_to_json(g));
  return json{{"direction", vec3_to_json(c.direction)}, {"generators", std::move(gens)}};
}

Cylinder3 cylinder_from_json(const json& j) {
  if (!j.is_object() || !j.contains("direction") || !j.contains("generators")) {
    throw Error(ErrorCode::ParseError, "cylinder: expected { direction, generators }");
  }
  Cylinder3 c;
  c.direction = vec3_from_json(j["direction"], "cylinder.direction");
  if (!j["generators"].is_array() || j["generators"].empty()) {
    throw Error(ErrorCode::ParseError, "cylinder.generators: expected a nonempty array");
  }
  for (const json& g : j["generators"]) c.generators.push_back(vec3_from_json(g, "cylinder.generators"));
  validate_cylinder(c);
  return c;
}

json cylinder_list_to_json(const std::vector<Cylinder3>& list) {
  json arr = json::array();
  for (const Cylinder3& c : list) arr.push_back(cylinder_to_json(c));
  return arr;
}

std::vector<Cylinder3> cylinder_list_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": expected a nonempty array");
  }
  std::vector<Cylinder3> out;
  out.reserve(j.size());
  for (const json& c : j) out.push_back(cylinder_from_json(c));
  return out;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "invalid JSON");
  return j;
}

json int_list_to_json(const std::vector<int>& v) {
  json arr = json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

std::vector<int> int_list_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& x : j) {
    if (!x.is_number_integer()) {
      throw Error(ErrorCode::ParseError, std::string(what) + ": expected integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::CommonPoint:
      return "common-point";
    case GenKind::CoplanarLines:
      return "coplanar-lines";
    case GenKind::Hyperboloid:
      return "hyperboloid";
    case GenKind::Stack:
      return "stack";
    case GenKind::Rounded:
      return "rounded";
  }
  return "common-point";
}

GenKind gen_kind_from_name(const std::string& name) {
  if (name == "common-point") return GenKind::CommonPoint;
  if (name == "coplanar-lines") return GenKind::CoplanarLines;
  if (name == "hyperboloid") return GenKind::Hyperboloid;
  if (name == "stack") return GenKind::Stack;
  if (name == "rounded") return GenKind::Rounded;
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind: " + name);
}

InstanceFile generate_instance(const GenSpec& spec) {
  InstanceFile file;
  file.meta = json{{"generator", gen_kind_name(spec.kind)}, {"n", spec.n}, {"seed", spec.seed}};
  switch (spec.kind) {
    case GenKind::CommonPoint:
      file.kind = FileKind::Family;
      file.cylinders = gen_common_point(spec.n, spec.seed);
      break;
    case GenKind::CoplanarLines: {
      const double delta = spec.delta > 0.0 ? spec.delta : kCoplanarDefaultDelta;
      file.kind = FileKind::Family;
      file.cylinders = gen_coplanar_lines(spec.n, spec.seed, delta);
      file.meta["delta"] = delta;
      break;
    }
    case GenKind::Hyperboloid: {
      const double delta = spec.delta > 0.0 ? spec.delta : kHyperboloidDefaultDelta;
      file.kind = FileKind::Bipartite;
      std::tie(file.f, file.g) = gen_hyperboloid(spec.n, spec.seed, delta);
      file.meta["delta"] = delta;
      break;
    }
    case GenKind::Stack:
      file.kind = FileKind::Family;
      file.cylinders = gen_stack(spec.n, spec.seed);
      break;
    case GenKind::Rounded:
      file.kind = FileKind::Rounded;
      file.bodies = gen_rounded(spec.n, spec.D, spec.seed);
      file.D = spec.D;
      file.meta["D"] = spec.D;
      break;
  }
  return file;
}

std::string instance_to_json(const InstanceFile& file) {
  json j;
  j["meta"] = file.meta;
  switch (file.kind) {
    case FileKind::Family:
      j["kind"] = "family";
      j["cylinders"] = cylinder_list_to_json(file.cylinders);
      break;
    case FileKind::Bipartite:
      j["kind"] = "bipartite";
      j["f"] = cylinder_list_to_json(file.f);
      j["g"] = cylinder_list_to_json(file.g);
      break;
    case FileKind::Rounded: {
      j["kind"] = "rounded";
      j["D"] = file.D;
      json arr = json::array();
      for (const RoundedBody& b : file.bodies) {
        arr.push_back(json{{"center", vec3_to_json(b.center)}, {"r", b.r}, {"R", b.R}});
      }
      j["bodies"] = std::move(arr);
      break;
    }
  }
  return j.dump();
}

InstanceFile instance_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorCode::ParseError, "instance file: missing kind");
  }
  InstanceFile file;
  if (j.contains("meta")) file.meta = j["meta"];
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "family") {
    file.kind = FileKind::Family;
    if (!j.contains("cylinders")) throw Error(ErrorCode::ParseError, "family file: missing cylinders");
    file.cylinders = cylinder_list_from_json(j["cylinders"], "cylinders");
  } else if (kind == "bipartite") {
    file.kind = FileKind::Bipartite;
    if (!j.contains("f") || !j.contains("g")) {
      throw Error(ErrorCode::ParseError, "bipartite file: missing f or g");
    }
    file.f = cylinder_list_from_json(j["f"], "f");
    file.g = cylinder_list_from_json(j["g"], "g");
  } else if (kind == "rounded") {
    file.kind = FileKind::Rounded;
    if (!j.contains("bodies") || !j["bodies"].is_array() || j["bodies"].empty()) {
      throw Error(ErrorCode::ParseError, "rounded file: expected nonempty bodies");
    }
    if (!j.contains("D")) throw Error(ErrorCode::ParseError, "rounded file: missing D");
    file.D = number_at(j["D"], "D");
    for (const json& b : j["bodies"]) {
      if (!b.is_object() || !b.contains("center") || !b.contains("r") || !b.contains("R")) {
        throw Error(ErrorCode::ParseError, "rounded body: expected { center, r, R }");
      }
      RoundedBody body;
      body.center = vec3_from_json(b["center"], "body.center");
      body.r = number_at(b["r"], "body.r");
      body.R = number_at(b["R"], "body.R");
      file.bodies.push_back(body);
    }
  } else {
    throw Error(ErrorCode::ParseError, "instance file: unknown kind " + kind);
  }
  return file;
}

std::string report_to_json(const TransversalReport& report, bool verified) {
  json j;
  j["kind"] = "transversal_report";
  j["version"] = kVersion;
  j["branch"] = branch_name(report.branch);
  j["line"] = json{{"point", vec3_to_json(report.line.point)},
                   {"direction", vec3_to_json(report.line.direction)}};
  j["pivot"] = report.pivot;
  j["bound"] = report.bound;
  j["verified"] = verified;
  if (report.bipartite) {
    j["nf"] = report.nf;
    j["ng"] = report.ng;
    j["side"] = std::string(1, report.side);
    j["hits_f"] = int_list_to_json(report.hits_f);
    j["hits_g"] = int_list_to_json(report.hits_g);
  } else {
    j["n"] = report.n;
    j["hits"] = int_list_to_json(report.hits);
  }
  if (report.piercing) {
    json p;
    p["width"] = report.piercing->set.width;
    json pts = json::array();
    for (const Vec2& t : report.piercing->set.points) pts.push_back(vec2_to_json(t));
    p["points"] = std::move(pts);
    p["anchors"] = json{{"a", vec2_to_json(report.piercing->set.a)},
                        {"b", vec2_to_json(report.piercing->set.b)},
                        {"c", vec2_to_json(report.piercing->set.c)},
                        {"d", vec2_to_json(report.piercing->set.d)}};
    p["slab_counts"] = int_list_to_json(report.piercing->slab_counts);
    j["piercing"] = std::move(p);
  }
  if (report.perturbation) {
    json deltas = json::array();
    for (double d : report.perturbation->deltas) deltas.push_back(d);
    j["perturbation"] = json{{"seed", report.perturbation->seed},
                             {"magnitude", report.perturbation->magnitude},
                             {"deltas", std::move(deltas)}};
  }
  return j.dump();
}

TransversalReport report_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || j.value("kind", "") != "transversal_report") {
    throw Error(ErrorCode::ParseError, "expected a transversal_report file");
  }
  TransversalReport report;
  const std::string branch = j.value("branch", "");
  if (branch == "EarlyExit") {
    report.branch = Branch::EarlyExit;
  } else if (branch == "PlanarPiercing") {
    report.branch = Branch::PlanarPiercing;
  } else if (branch == "DegenerateSegment") {
    report.branch = Branch::DegenerateSegment;
  } else {
    throw Error(ErrorCode::ParseError, "report: unknown branch " + branch);
  }
  if (!j.contains("line")) throw Error(ErrorCode::ParseError, "report: missing line");
  report.line.point = vec3_from_json(j["line"]["point"], "line.point");
  report.line.direction = vec3_from_json(j["line"]["direction"], "line.direction");
  report.pivot = j.value("pivot", 0);
  report.bound = j.value("bound", 1);
  if (j.contains("hits_f") || j.contains("hits_g")) {
    report.bipartite = true;
    report.nf = j.value("nf", 0);
    report.ng = j.value("ng", 0);
    const std::string side = j.value("side", "");
    if (side != "f" && side != "g") throw Error(ErrorCode::ParseError, "report: bad side");
    report.side = side[0];
    report.hits_f = int_list_from_json(j.value("hits_f", json::array()), "hits_f");
    report.hits_g = int_list_from_json(j.value("hits_g", json::array()), "hits_g");
  } else {
    report.n = j.value("n", 0);
    if (!j.contains("hits")) throw Error(ErrorCode::ParseError, "report: missing hits");
    report.hits = int_list_from_json(j["hits"], "hits");
  }
  if (j.contains("perturbation")) {
    PerturbationRecord rec;
    rec.seed = j["perturbation"].value("seed", uint64_t{0});
    rec.magnitude = j["perturbation"].value("magnitude", 0.0);
    for (const json& d : j["perturbation"].value("deltas", json::array())) {
      rec.deltas.push_back(number_at(d, "perturbation.deltas"));
    }
    report.perturbation = std::move(rec);
  }
  // The piercing block is diagnostic output; reloading it is not needed for
  // verification, which recomputes everything from the line.
  return report;
}

std::string cover_to_json(const LineCover& cover, bool verified) {
  json j;
  j["kind"] = "cover_report";
  j["version"] = kVersion;
  j["origin"] = vec3_to_json(cover.origin);
  json dirs = json::array();
  for (const Vec3& d : cover.directions) dirs.push_back(vec3_to_json(d));
  j["directions"] = std::move(dirs);
  j["assignment"] = int_list_to_json(cover.assignment);
  j["phi"] = cover.phi;
  j["D"] = cover.D;
  j["lines"] = cover.directions.size();
  j["bound"] = static_cast<long long>(32.0 * cover.D * cover.D);
  j["verified"] = verified;
  return j.dump();
}

LineCover cover_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || j.value("kind", "") != "cover_report") {
    throw Error(ErrorCode::ParseError, "expected a cover_report file");
  }
  LineCover cover;
  cover.origin = vec3_from_json(j.at("origin"), "origin");
  for (const json& d : j.at("directions")) cover.directions.push_back(vec3_from_json(d, "directions"));
  cover.assignment = int_list_from_json(j.at("assignment"), "assignment");
  cover.phi = number_at(j.at("phi"), "phi");
  cover.D = number_at(j.at("D"), "D");
  return cover;
}

std::string polygon_to_json(const ConvexPolygon& poly) {
  json verts = json::array();
  for (const Vec2& v : poly.verts) verts.push_back(vec2_to_json(v));
  return json{{"kind", "polygon"}, {"vertices", std::move(verts)}}.dump();
}

ConvexPolygon polygon_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || j.value("kind", "") != "polygon" || !j.contains("vertices")) {
    throw Error(ErrorCode::ParseError, "expected a polygon file with vertices");
  }
  std::vector<Vec2> pts;
  for (const json& v : j["vertices"]) pts.push_back(vec2_from_json(v, "vertices"));
  return convex_hull(pts);
}

}  // namespace cylt
