#pragma once

#include <string>

#include <json.hpp>

#include "cyltrans/instances.hpp"
#include "cyltrans/rounded_types.hpp"
#include "cyltrans/transversal.hpp"

namespace cylt {

enum class FileKind { Family, Bipartite, Rounded };

// One instance file: exactly one of the payloads is populated, per `kind`.
// Cylinders are stored frame-free as { direction, generators }.
struct InstanceFile {
  FileKind kind = FileKind::Family;
  std::vector<Cylinder3> cylinders;    // kind == Family
  std::vector<Cylinder3> f, g;         // kind == Bipartite
  std::vector<RoundedBody> bodies;     // kind == Rounded
  double D = 1.0;                      // kind == Rounded
  nlohmann::json meta = nlohmann::json::object();
};

const char* gen_kind_name(GenKind kind);
GenKind gen_kind_from_name(const std::string& name);

// Runs the generator named by the spec and records the spec in `meta`.
InstanceFile generate_instance(const GenSpec& spec);

std::string instance_to_json(const InstanceFile& file);
InstanceFile instance_from_json(const std::string& text);

std::string report_to_json(const TransversalReport& report, bool verified);
TransversalReport report_from_json(const std::string& text);

std::string cover_to_json(const LineCover& cover, bool verified);
LineCover cover_from_json(const std::string& text);

// {"kind":"polygon","vertices":[[x,y],...]}; vertices are canonicalized
// through convex_hull on load.
std::string polygon_to_json(const ConvexPolygon& poly);
ConvexPolygon polygon_from_json(const std::string& text);

}  // namespace cylt
