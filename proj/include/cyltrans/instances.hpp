#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyltrans/rounded_types.hpp"
#include "cyltrans/solid.hpp"

namespace cylt {

enum class GenKind { CommonPoint, CoplanarLines, Hyperboloid, Stack, Rounded };

struct GenSpec {
  GenKind kind = GenKind::CommonPoint;
  int n = 1;
  uint64_t seed = 0;
  double delta = 0.0;  // thickness; 0 means the kind's default
  double D = 1.0;      // rounded only
};

inline constexpr double kCoplanarDefaultDelta = 1e-3;
inline constexpr double kHyperboloidDefaultDelta = 1e-2;

// Cylinders with random directions and cross-sections, each translated to
// contain one hidden common point (not part of the output).
std::vector<Cylinder3> gen_common_point(int n, uint64_t seed);

struct CommonPointFamily {
  std::vector<Cylinder3> cylinders;
  Vec3 point;  // the hidden witness
};
CommonPointFamily gen_common_point_with_witness(int n, uint64_t seed);

// Thin cylinders around pairwise non-parallel lines in the plane z = 0;
// pairwise intersecting, no point shared by three of the center lines.
std::vector<Cylinder3> gen_coplanar_lines(int n, uint64_t seed, double delta = kCoplanarDefaultDelta);

// Thickened lines from the two rulings of x^2 + y^2 - z^2 = 1; every
// cross-ruling pair intersects (near-antipodal parallel pairs are resampled).
std::pair<std::vector<Cylinder3>, std::vector<Cylinder3>> gen_hyperboloid(
    int n_per_side, uint64_t seed, double delta = kHyperboloidDefaultDelta);

// One long thin needle (index 0) plus n-1 wide cylinders stacked along it,
// each severing the needle; forces the early-exit solver branch.
std::vector<Cylinder3> gen_stack(int n, uint64_t seed);

// Well-rounded bodies with radii in [1, 2] and R/r < D, centered so the
// covering precondition holds.
std::vector<RoundedBody> gen_rounded(int n, double D, uint64_t seed);

std::vector<Cylinder3> generate_family(const GenSpec& spec);

// Grid-sampling oracle for "a \ b is disconnected", independent of the
// projection predicate: occupancy grid over a box around the interaction,
// connectivity between the two far ends of a along its axis. Meaningful for
// full-dimensional cross-sections; flat b never cuts a sampled fiber.
// Deterministic given (resolution, seed).
bool mc_crossing_oracle(const Cylinder3& a, const Cylinder3& b, int resolution, uint64_t seed);

// 2D core of the same idea: true iff the slab minus the polygon separates the
// two far sides of the slab.
bool mc_slab_crossing_2d(const ConvexPolygon& poly, const Slab2& slab, int resolution, uint64_t seed);

}  // namespace cylt
