#include "cyltrans/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cyltrans/error.hpp"
#include "cyltrans/parallel.hpp"
#include "cyltrans/rng.hpp"

namespace cylt {

namespace {

// Inflation for point-in-slab counting; matches the piercing oracle margin.
constexpr double kSlabInflate = 1e-6;

const char* kBranchNames[] = {"EarlyExit", "PlanarPiercing", "DegenerateSegment"};

struct Views {
  std::vector<Frame> frames;
  std::vector<ConvexPolygon> sections;
  std::vector<double> widths;
};

Views make_views(const std::vector<Cylinder3>& family) {
  Views v;
  const size_t n = family.size();
  v.frames.resize(n);
  v.sections.resize(n);
  v.widths.resize(n);
  for (size_t i = 0; i < n; ++i) {
    v.frames[i] = make_frame(family[i].direction);
    v.sections[i] = std::get<ConvexPolygon>(shadow(family[i], v.frames[i]));
    v.widths[i] = min_width_slab(v.sections[i]).width;
  }
  return v;
}

bool intersects_cached(const Cylinder3& a, const Frame& fb, const ConvexPolygon& kb, double eps) {
  const Shadow sa = shadow(a, fb);
  if (const Slab2* slab = std::get_if<Slab2>(&sa)) {
    return classify_slab(kb, *slab, eps) != SlabRelation::Disjoint;
  }
  return convex_polygons_intersect(kb, std::get<ConvexPolygon>(sa), eps);
}

// First violating pair in lexicographic order, or (-1, -1).
std::pair<int, int> first_disjoint_pair(const std::vector<Cylinder3>& family, const Views& views,
                                        double eps, int jobs) {
  const int n = static_cast<int>(family.size());
  std::vector<int> row_witness(static_cast<size_t>(n), n);
  parallel_for(0, n, jobs, [&](int i) {
    for (int j = i + 1; j < n; ++j) {
      if (!intersects_cached(family[static_cast<size_t>(i)], views.frames[static_cast<size_t>(j)],
                             views.sections[static_cast<size_t>(j)], eps)) {
        row_witness[static_cast<size_t>(i)] = j;
        return;
      }
    }
  });
  for (int i = 0; i < n; ++i) {
    if (row_witness[static_cast<size_t>(i)] < n) return {i, row_witness[static_cast<size_t>(i)]};
  }
  return {-1, -1};
}

std::pair<int, int> first_disjoint_cross_pair(const std::vector<Cylinder3>& f,
                                              const std::vector<Cylinder3>& g, const Views& gviews,
                                              double eps, int jobs) {
  const int nf = static_cast<int>(f.size());
  const int ng = static_cast<int>(g.size());
  std::vector<int> row_witness(static_cast<size_t>(nf), ng);
  parallel_for(0, nf, jobs, [&](int i) {
    for (int j = 0; j < ng; ++j) {
      if (!intersects_cached(f[static_cast<size_t>(i)], gviews.frames[static_cast<size_t>(j)],
                             gviews.sections[static_cast<size_t>(j)], eps)) {
        row_witness[static_cast<size_t>(i)] = j;
        return;
      }
    }
  });
  for (int i = 0; i < nf; ++i) {
    if (row_witness[static_cast<size_t>(i)] < ng) return {i, row_witness[static_cast<size_t>(i)]};
  }
  return {-1, -1};
}

SlabRelation relation_cached(const Cylinder3& a, const Frame& fb, const ConvexPolygon& kb,
                             double eps) {
  const Shadow sa = shadow(a, fb);
  const Slab2* slab = std::get_if<Slab2>(&sa);
  if (slab == nullptr) {
    throw Error(ErrorCode::ParallelAxes, "crossing digraph requires pairwise non-parallel axes");
  }
  return classify_slab(kb, *slab, eps);
}

Digraph finish_digraph(int n, std::vector<uint8_t> matrix) {
  Digraph d;
  d.n = n;
  d.matrix = std::move(matrix);
  d.outdeg.assign(static_cast<size_t>(n), 0);
  d.indeg.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d.matrix[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]) {
        d.arcs.push_back({i, j});
        ++d.outdeg[static_cast<size_t>(i)];
        ++d.indeg[static_cast<size_t>(j)];
      }
    }
  }
  return d;
}

Digraph build_digraph_cached(const std::vector<Cylinder3>& family, const Views& views, double eps,
                             int jobs) {
  const int n = static_cast<int>(family.size());
  std::vector<uint8_t> matrix(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  parallel_for(0, n, jobs, [&](int i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const SlabRelation rel =
          relation_cached(family[static_cast<size_t>(i)], views.frames[static_cast<size_t>(j)],
                          views.sections[static_cast<size_t>(j)], eps);
      if (rel == SlabRelation::Crosses) {
        matrix[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = 1;
      }
    }
  });
  return finish_digraph(n, std::move(matrix));
}

Digraph build_bipartite_digraph_cached(const std::vector<Cylinder3>& all, int nf, const Views& views,
                                       double eps, int jobs) {
  const int n = static_cast<int>(all.size());
  std::vector<uint8_t> matrix(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  parallel_for(0, n, jobs, [&](int i) {
    const bool i_in_f = i < nf;
    for (int j = 0; j < n; ++j) {
      if ((j < nf) == i_in_f) continue;
      const SlabRelation rel =
          relation_cached(all[static_cast<size_t>(i)], views.frames[static_cast<size_t>(j)],
                          views.sections[static_cast<size_t>(j)], eps);
      if (rel == SlabRelation::Crosses) {
        matrix[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = 1;
      }
    }
  });
  return finish_digraph(n, std::move(matrix));
}

bool slab_contains(const Slab2& slab, Vec2 p, double inflate) {
  const double d = dot(p, normalized(slab.normal));
  return d >= slab.lo - inflate && d <= slab.hi + inflate;
}

std::vector<int> score_line(const Line3& line, const std::vector<Cylinder3>& family, double eps,
                            int jobs) {
  const int n = static_cast<int>(family.size());
  std::vector<uint8_t> hit(static_cast<size_t>(n), 0);
  parallel_for(0, n, jobs, [&](int j) {
    hit[static_cast<size_t>(j)] = line_hits_cylinder(line, family[static_cast<size_t>(j)], eps) ? 1 : 0;
  });
  std::vector<int> out;
  for (int j = 0; j < n; ++j) {
    if (hit[static_cast<size_t>(j)]) out.push_back(j);
  }
  return out;
}

Vec3 random_unit_vec(SplitMix64& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

// Candidate lines plus the pieces of the report that depend on the branch.
struct PassResult {
  Branch branch = Branch::EarlyExit;
  int pivot = 0;
  std::vector<Line3> candidates;
  std::optional<PiercingInfo> piercing;
  char side = 0;  // bipartite only
};

// Projection, piercing and candidate-lift steps shared by the single-family
// and bipartite solves: `survivors` are the indices whose shadows become the
// slabs in the pivot's frame.
PassResult run_piercing_stage(const std::vector<Cylinder3>& pert, const Views& views, int pivot,
                              const std::vector<int>& survivors, double eps) {
  PassResult out;
  out.pivot = pivot;

  const Frame& frame = views.frames[static_cast<size_t>(pivot)];
  const ConvexPolygon& section = views.sections[static_cast<size_t>(pivot)];
  const double width = views.widths[static_cast<size_t>(pivot)];

  std::vector<Slab2> slabs;
  slabs.reserve(survivors.size());
  for (int idx : survivors) {
    if (idx == pivot) continue;
    const Shadow sh = shadow(pert[static_cast<size_t>(idx)], frame);
    const Slab2* slab = std::get_if<Slab2>(&sh);
    if (slab == nullptr) {
      throw Error(ErrorCode::ParallelAxes, "projection stage hit a parallel axis");
    }
    if (slab->width() < width - 1e-9) {
      throw Error(ErrorCode::Internal, "pipeline invariant: projected slab narrower than the pivot");
    }
    if (classify_slab(section, *slab, eps) != SlabRelation::Meets) {
      throw Error(ErrorCode::Internal, "pipeline invariant: survivor slab does not meet the section");
    }
    slabs.push_back(*slab);
  }

  PiercingInfo info;
  info.set = piercing_points(section);
  out.branch = width <= 1e-12 ? Branch::DegenerateSegment : Branch::PlanarPiercing;

  info.slab_counts.assign(info.set.points.size(), 0);
  int max_count = 0;
  for (const Slab2& slab : slabs) {
    bool pierced = false;
    for (size_t t = 0; t < info.set.points.size(); ++t) {
      if (slab_contains(slab, info.set.points[t], kSlabInflate)) {
        pierced = true;
        max_count = std::max(max_count, ++info.slab_counts[t]);
      }
    }
    if (!pierced) {
      // The piercing construction covers every wide non-crossing slab; a miss
      // here is an escalation, not something to patch around.
      throw Error(ErrorCode::PiercingFailure, "survivor slab missed by every piercing point");
    }
  }
  const int needed = static_cast<int>((slabs.size() + 11) / 12);
  if (!slabs.empty() && max_count < needed) {
    throw Error(ErrorCode::Internal, "pipeline invariant: pigeonhole count too small");
  }

  out.candidates.reserve(info.set.points.size());
  for (const Vec2& t : info.set.points) {
    out.candidates.push_back(Line3{frame.from_plane(t), pert[static_cast<size_t>(pivot)].direction});
  }
  out.piercing = std::move(info);
  return out;
}

}  // namespace

const char* branch_name(Branch b) { return kBranchNames[static_cast<int>(b)]; }

int guarantee_bound(int n) { return std::max(1, n / 28); }

std::pair<std::vector<Cylinder3>, std::vector<double>> perturb_directions(
    const std::vector<Cylinder3>& family, uint64_t seed, double magnitude) {
  if (!(magnitude > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "perturb_directions: magnitude must be > 0");
  }
  std::vector<Cylinder3> out = family;
  std::vector<double> deltas(family.size(), 0.0);
  SplitMix64 rng(seed);
  std::vector<Vec3> accepted;
  accepted.reserve(family.size());

  for (size_t i = 0; i < family.size(); ++i) {
    validate_cylinder(family[i], static_cast<int>(i));
    const Vec3 d = normalized(family[i].direction);
    bool conflict = false;
    for (const Vec3& t : accepted) {
      if (norm(cross(d, t)) <= kParallelTol) {
        conflict = true;
        break;
      }
    }
    if (!conflict) {
      accepted.push_back(d);
      continue;
    }
    bool placed = false;
    for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
      // Rotation budget grows from `magnitude` to the 16x ceiling.
      const double cap = magnitude * static_cast<double>(1 << std::min(attempt, 4));
      Vec3 axis{0.0, 0.0, 0.0};
      for (int tries = 0; tries < 64; ++tries) {
        const Vec3 raw = random_unit_vec(rng);
        const Vec3 ortho = raw - dot(raw, d) * d;
        if (norm(ortho) > 1e-6) {
          axis = normalized(ortho);
          break;
        }
      }
      const double angle = cap * (0.5 + 0.5 * rng.uniform());
      const Vec3 cand = normalized(rotate_about(d, axis, angle));
      bool ok = true;
      for (const Vec3& t : accepted) {
        if (norm(cross(cand, t)) <= kParallelTol) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out[i].direction = cand;
        deltas[i] = angle;
        accepted.push_back(cand);
        placed = true;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::PerturbationFailed,
                  "perturb_directions: could not separate direction " + std::to_string(i),
                  static_cast<int>(i));
    }
  }
  return {std::move(out), std::move(deltas)};
}

Digraph build_digraph(const std::vector<Cylinder3>& family, double eps, int jobs) {
  for (size_t i = 0; i < family.size(); ++i) validate_cylinder(family[i], static_cast<int>(i));
  const Views views = make_views(family);
  return build_digraph_cached(family, views, eps, jobs);
}

Digraph build_bipartite_digraph(const std::vector<Cylinder3>& f, const std::vector<Cylinder3>& g,
                                double eps, int jobs) {
  std::vector<Cylinder3> all = f;
  all.insert(all.end(), g.begin(), g.end());
  for (size_t i = 0; i < all.size(); ++i) validate_cylinder(all[i], static_cast<int>(i));
  const Views views = make_views(all);
  return build_bipartite_digraph_cached(all, static_cast<int>(f.size()), views, eps, jobs);
}

namespace {

TransversalReport solve_pass(const std::vector<Cylinder3>& original,
                             const std::vector<Cylinder3>& pert, std::vector<double> deltas,
                             uint64_t seed, double magnitude, const SolveOptions& opt) {
  const int n = static_cast<int>(pert.size());
  const Views views = make_views(pert);
  const Digraph digraph = build_digraph_cached(pert, views, opt.epsilon, opt.jobs);

  PassResult pass;
  int exit_idx = -1;
  if (n == 1) {
    exit_idx = 0;  // a single cylinder's own fiber is the whole answer
  } else {
    for (int i = 0; i < n; ++i) {
      if (28 * digraph.outdeg[static_cast<size_t>(i)] >= n) {
        exit_idx = i;
        break;
      }
    }
  }

  if (exit_idx >= 0) {
    pass.branch = Branch::EarlyExit;
    pass.pivot = exit_idx;
    const Vec2 center = vertex_centroid(views.sections[static_cast<size_t>(exit_idx)]);
    pass.candidates = {Line3{views.frames[static_cast<size_t>(exit_idx)].from_plane(center),
                             pert[static_cast<size_t>(exit_idx)].direction}};
  } else {
    std::vector<int> fprime;
    for (int i = 0; i < n; ++i) {
      if (14 * digraph.indeg[static_cast<size_t>(i)] <= n) fprime.push_back(i);
    }
    if (static_cast<int>(fprime.size()) < (n + 1) / 2) {
      throw Error(ErrorCode::Internal, "pipeline invariant: low-indegree pool under n/2");
    }
    int pivot = fprime[0];
    for (int idx : fprime) {
      if (views.widths[static_cast<size_t>(idx)] < views.widths[static_cast<size_t>(pivot)]) {
        pivot = idx;
      }
    }
    std::vector<int> survivors;
    for (int idx : fprime) {
      if (idx == pivot || !digraph.has_arc(idx, pivot)) survivors.push_back(idx);
    }
    if (!(static_cast<double>(survivors.size()) > 3.0 * n / 7.0 - 1.0)) {
      throw Error(ErrorCode::Internal, "pipeline invariant: survivor pool under 3n/7 - 1");
    }
    pass = run_piercing_stage(pert, views, pivot, survivors, opt.epsilon);
  }

  // Exact recount of every candidate against the original input.
  TransversalReport report;
  report.n = n;
  report.branch = pass.branch;
  report.pivot = pass.pivot;
  report.piercing = std::move(pass.piercing);
  report.bound = guarantee_bound(n);

  std::vector<int> best;
  Line3 best_line = pass.candidates.front();
  for (const Line3& cand : pass.candidates) {
    std::vector<int> hits = score_line(cand, original, opt.epsilon, opt.jobs);
    if (hits.size() > best.size()) {
      best = std::move(hits);
      best_line = cand;
    }
  }
  report.line = best_line;
  report.hits = std::move(best);

  bool any_delta = false;
  for (double d : deltas) any_delta = any_delta || d != 0.0;
  if (any_delta) report.perturbation = PerturbationRecord{seed, magnitude, std::move(deltas)};
  return report;
}

TransversalReport solve_bipartite_pass(const std::vector<Cylinder3>& original_all, int nf, int ng,
                                       const std::vector<Cylinder3>& pert, std::vector<double> deltas,
                                       uint64_t seed, double magnitude, const SolveOptions& opt) {
  const int n = nf + ng;
  const Views views = make_views(pert);
  const Digraph digraph = build_bipartite_digraph_cached(pert, nf, views, opt.epsilon, opt.jobs);
  const bool balanced = nf == ng;

  PassResult pass;
  int exit_idx = -1;
  if (nf == 1 && ng == 1) {
    exit_idx = 0;
  } else {
    for (int i = 0; i < n; ++i) {
      const int opposite = i < nf ? ng : nf;
      if (28 * digraph.outdeg[static_cast<size_t>(i)] >= opposite) {
        exit_idx = i;
        break;
      }
    }
  }

  if (exit_idx >= 0) {
    pass.branch = Branch::EarlyExit;
    pass.pivot = exit_idx;
    pass.side = exit_idx < nf ? 'g' : 'f';
    const Vec2 center = vertex_centroid(views.sections[static_cast<size_t>(exit_idx)]);
    pass.candidates = {Line3{views.frames[static_cast<size_t>(exit_idx)].from_plane(center),
                             pert[static_cast<size_t>(exit_idx)].direction}};
  } else {
    std::vector<int> fprime, gprime;
    for (int i = 0; i < nf; ++i) {
      if (14 * digraph.indeg[static_cast<size_t>(i)] <= ng) fprime.push_back(i);
    }
    for (int j = nf; j < n; ++j) {
      if (14 * digraph.indeg[static_cast<size_t>(j)] <= nf) gprime.push_back(j);
    }
    if (balanced) {
      if (static_cast<int>(fprime.size()) < (nf + 1) / 2 ||
          static_cast<int>(gprime.size()) < (ng + 1) / 2) {
        throw Error(ErrorCode::Internal, "pipeline invariant: low-indegree class under n/2");
      }
    }
    int pivot = -1;
    for (const std::vector<int>* pool : {&fprime, &gprime}) {
      for (int idx : *pool) {
        if (pivot < 0 || views.widths[static_cast<size_t>(idx)] < views.widths[static_cast<size_t>(pivot)] ||
            (views.widths[static_cast<size_t>(idx)] == views.widths[static_cast<size_t>(pivot)] &&
             idx < pivot)) {
          pivot = idx;
        }
      }
    }
    if (pivot < 0) throw Error(ErrorCode::Internal, "bipartite pivot pool empty");
    const bool pivot_in_f = pivot < nf;
    const std::vector<int>& opposite_pool = pivot_in_f ? gprime : fprime;
    std::vector<int> survivors;
    for (int idx : opposite_pool) {
      if (!digraph.has_arc(idx, pivot)) survivors.push_back(idx);
    }
    if (balanced &&
        !(static_cast<double>(survivors.size()) > 3.0 * nf / 7.0 - 1.0)) {
      throw Error(ErrorCode::Internal, "pipeline invariant: bipartite survivors under 3n/7 - 1");
    }
    pass = run_piercing_stage(pert, views, pivot, survivors, opt.epsilon);
    pass.side = pivot_in_f ? 'g' : 'f';
  }

  TransversalReport report;
  report.bipartite = true;
  report.nf = nf;
  report.ng = ng;
  report.branch = pass.branch;
  report.pivot = pass.pivot;
  report.side = pass.side;
  report.piercing = std::move(pass.piercing);
  report.bound = balanced ? guarantee_bound(nf) : 1;

  // Best candidate by hits on the guaranteed side, then total, then order.
  std::vector<int> best_f, best_g;
  Line3 best_line = pass.candidates.front();
  long best_side_count = -1, best_total = -1;
  for (const Line3& cand : pass.candidates) {
    std::vector<int> hits_all = score_line(cand, original_all, opt.epsilon, opt.jobs);
    std::vector<int> hf, hg;
    for (int idx : hits_all) {
      if (idx < nf) {
        hf.push_back(idx);
      } else {
        hg.push_back(idx - nf);
      }
    }
    const long side_count = static_cast<long>(pass.side == 'f' ? hf.size() : hg.size());
    const long total = static_cast<long>(hits_all.size());
    if (side_count > best_side_count || (side_count == best_side_count && total > best_total)) {
      best_side_count = side_count;
      best_total = total;
      best_f = std::move(hf);
      best_g = std::move(hg);
      best_line = cand;
    }
  }
  report.line = best_line;
  report.hits_f = std::move(best_f);
  report.hits_g = std::move(best_g);

  bool any_delta = false;
  for (double d : deltas) any_delta = any_delta || d != 0.0;
  if (any_delta) report.perturbation = PerturbationRecord{seed, magnitude, std::move(deltas)};
  return report;
}

}  // namespace

TransversalReport solve(const std::vector<Cylinder3>& family, const SolveOptions& options) {
  if (family.empty()) throw Error(ErrorCode::EmptyInput, "solve: empty family");
  for (size_t i = 0; i < family.size(); ++i) validate_cylinder(family[i], static_cast<int>(i));

  const Views original_views = make_views(family);
  const auto [wa, wb] = first_disjoint_pair(family, original_views, options.epsilon, options.jobs);
  if (wa >= 0) {
    throw Error(ErrorCode::NotPairwiseIntersecting,
                "cylinders " + std::to_string(wa) + " and " + std::to_string(wb) + " are disjoint",
                wa, wb);
  }

  const int bound = guarantee_bound(static_cast<int>(family.size()));
  for (int attempt = 0; attempt <= 8; ++attempt) {
    const double magnitude = options.perturb / static_cast<double>(1 << attempt);
    const uint64_t seed = options.seed + static_cast<uint64_t>(attempt);
    auto [pert, deltas] = perturb_directions(family, seed, magnitude);
    TransversalReport report =
        solve_pass(family, pert, std::move(deltas), seed, magnitude, options);
    if (static_cast<int>(report.hits.size()) >= bound) return report;
  }
  throw Error(ErrorCode::GuaranteeMissed, "solve: hit bound missed after perturbation retries");
}

TransversalReport solve_bipartite(const std::vector<Cylinder3>& f, const std::vector<Cylinder3>& g,
                                  const SolveOptions& options) {
  if (f.empty() || g.empty()) throw Error(ErrorCode::EmptyInput, "solve_bipartite: empty class");
  for (size_t i = 0; i < f.size(); ++i) validate_cylinder(f[i], static_cast<int>(i));
  for (size_t j = 0; j < g.size(); ++j) validate_cylinder(g[j], static_cast<int>(j));

  const Views gviews = make_views(g);
  const auto [wa, wb] = first_disjoint_cross_pair(f, g, gviews, options.epsilon, options.jobs);
  if (wa >= 0) {
    throw Error(ErrorCode::NotCrossIntersecting,
                "cylinder " + std::to_string(wa) + " of f and " + std::to_string(wb) +
                    " of g are disjoint",
                wa, wb);
  }

  std::vector<Cylinder3> all = f;
  all.insert(all.end(), g.begin(), g.end());
  const int nf = static_cast<int>(f.size());
  const int ng = static_cast<int>(g.size());
  const int bound = nf == ng ? guarantee_bound(nf) : 1;

  for (int attempt = 0; attempt <= 8; ++attempt) {
    const double magnitude = options.perturb / static_cast<double>(1 << attempt);
    const uint64_t seed = options.seed + static_cast<uint64_t>(attempt);
    auto [pert, deltas] = perturb_directions(all, seed, magnitude);
    TransversalReport report =
        solve_bipartite_pass(all, nf, ng, pert, std::move(deltas), seed, magnitude, options);
    const int side_hits = static_cast<int>(report.side == 'f' ? report.hits_f.size()
                                                              : report.hits_g.size());
    if (side_hits >= bound) return report;
  }
  throw Error(ErrorCode::GuaranteeMissed, "solve_bipartite: hit bound missed after retries");
}

bool verify_report(const std::vector<Cylinder3>& family, const TransversalReport& report,
                   double eps, int jobs) {
  if (report.bipartite) return false;
  const int n = static_cast<int>(family.size());
  if (report.n != n || report.hits.empty()) return false;
  for (int idx : report.hits) {
    if (idx < 0 || idx >= n) return false;
  }
  const std::vector<int> recomputed = score_line(report.line, family, eps, jobs);
  if (!std::includes(recomputed.begin(), recomputed.end(), report.hits.begin(), report.hits.end())) {
    return false;
  }
  return static_cast<int>(report.hits.size()) >= guarantee_bound(n);
}

bool verify_report(const std::vector<Cylinder3>& f, const std::vector<Cylinder3>& g,
                   const TransversalReport& report, double eps, int jobs) {
  if (!report.bipartite) return false;
  const int nf = static_cast<int>(f.size());
  const int ng = static_cast<int>(g.size());
  if (report.nf != nf || report.ng != ng) return false;
  if (report.side != 'f' && report.side != 'g') return false;
  for (int idx : report.hits_f) {
    if (idx < 0 || idx >= nf) return false;
  }
  for (int idx : report.hits_g) {
    if (idx < 0 || idx >= ng) return false;
  }
  const std::vector<int> rf = score_line(report.line, f, eps, jobs);
  const std::vector<int> rg = score_line(report.line, g, eps, jobs);
  if (!std::includes(rf.begin(), rf.end(), report.hits_f.begin(), report.hits_f.end())) return false;
  if (!std::includes(rg.begin(), rg.end(), report.hits_g.begin(), report.hits_g.end())) return false;
  const size_t side_hits = report.side == 'f' ? report.hits_f.size() : report.hits_g.size();
  const int bound = nf == ng ? guarantee_bound(nf) : 1;
  return static_cast<int>(side_hits) >= bound && side_hits > 0;
}

}  // namespace cylt
