#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyltrans/piercing.hpp"
#include "cyltrans/solid.hpp"

namespace cylt {

// Crossing digraph: arc i -> j iff cylinder i minus cylinder j is disconnected.
struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // lexicographically sorted
  std::vector<int> outdeg, indeg;
  std::vector<uint8_t> matrix;  // n*n, row-major

  bool has_arc(int i, int j) const {
    return matrix[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] != 0;
  }
};

enum class Branch { EarlyExit, PlanarPiercing, DegenerateSegment };

const char* branch_name(Branch b);

struct PerturbationRecord {
  uint64_t seed = 0;
  double magnitude = 0.0;
  std::vector<double> deltas;  // per-cylinder rotation angle, radians
};

struct PiercingInfo {
  PiercingSet set;
  std::vector<int> slab_counts;  // per piercing point: survivor slabs containing it
};

struct TransversalReport {
  Branch branch = Branch::EarlyExit;
  Line3 line;
  int n = 0;           // family size (single-family mode)
  int nf = 0, ng = 0;  // class sizes (bipartite mode)
  bool bipartite = false;
  std::vector<int> hits;            // single-family: sorted indices into the input
  std::vector<int> hits_f, hits_g;  // bipartite: per class
  int pivot = 0;                    // early-exit cylinder or the min-width pivot C (global index)
  int bound = 1;                    // the guarantee the hits satisfy
  char side = 0;                    // bipartite: 'f' or 'g', the class the guarantee is on
  std::optional<PiercingInfo> piercing;
  std::optional<PerturbationRecord> perturbation;
};

struct SolveOptions {
  uint64_t seed = 0;
  double epsilon = kEps;
  double perturb = 1e-7;  // radians
  int jobs = 1;
};

// max(1, floor(n / 28)).
int guarantee_bound(int n);

// Makes the axis directions pairwise non-parallel (line angle > 1e-9 rad) by
// rotating only the offenders, normally by at most `magnitude` and never more
// than 16x that; generators are untouched. Deterministic given the seed.
// Returns the new family and the per-cylinder rotation angles.
std::pair<std::vector<Cylinder3>, std::vector<double>> perturb_directions(
    const std::vector<Cylinder3>& family, uint64_t seed, double magnitude);

Digraph build_digraph(const std::vector<Cylinder3>& family, double eps = kEps, int jobs = 1);

// Arcs only between the two classes; vertices 0..|f|-1 are f, the rest g.
Digraph build_bipartite_digraph(const std::vector<Cylinder3>& f, const std::vector<Cylinder3>& g,
                                double eps = kEps, int jobs = 1);

// A line meeting at least max(1, floor(n/28)) members of a pairwise
// intersecting family. Hits are recomputed against the original (unperturbed)
// input; if a perturbation-induced recount misses the bound, the perturbation
// magnitude is halved and the solve retried up to 8 times.
TransversalReport solve(const std::vector<Cylinder3>& family, const SolveOptions& options = {});

// Bipartite variant: only cross-pairs need to intersect; the guarantee
// max(1, floor(n/28)) holds on the reported side when |f| == |g| == n.
TransversalReport solve_bipartite(const std::vector<Cylinder3>& f, const std::vector<Cylinder3>& g,
                                  const SolveOptions& options = {});

// Recomputes every hit against the original input; true iff the recomputed
// hit set contains the reported one and the reported hits meet the bound.
bool verify_report(const std::vector<Cylinder3>& family, const TransversalReport& report,
                   double eps = kEps, int jobs = 1);
bool verify_report(const std::vector<Cylinder3>& f, const std::vector<Cylinder3>& g,
                   const TransversalReport& report, double eps = kEps, int jobs = 1);

}  // namespace cylt
