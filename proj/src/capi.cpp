#include "cyltrans.h"

#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "cyltrans/error.hpp"
#include "cyltrans/json_io.hpp"
#include "cyltrans/rounded.hpp"
#include "cyltrans/svg.hpp"
#include "cyltrans/version.hpp"

struct cylt_family {
  cylt::InstanceFile file;
};

struct cylt_report {
  std::variant<cylt::TransversalReport, cylt::LineCover> payload;
  bool verified = false;

  bool is_cover() const { return payload.index() == 1; }
};

namespace {

thread_local std::string g_error_message;
thread_local int32_t g_witness_a = -1;
thread_local int32_t g_witness_b = -1;

void clear_error() {
  g_error_message.clear();
  g_witness_a = -1;
  g_witness_b = -1;
}

cylt_status map_code(cylt::ErrorCode code) {
  using cylt::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return CYLT_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError:
      return CYLT_ERR_PARSE;
    case ErrorCode::EmptyInput:
      return CYLT_ERR_EMPTY_INPUT;
    case ErrorCode::ZeroDirection:
      return CYLT_ERR_ZERO_DIRECTION;
    case ErrorCode::ParallelAxes:
      return CYLT_ERR_PARALLEL_AXES;
    case ErrorCode::NotPairwiseIntersecting:
      return CYLT_ERR_NOT_PAIRWISE_INTERSECTING;
    case ErrorCode::NotCrossIntersecting:
      return CYLT_ERR_NOT_CROSS_INTERSECTING;
    case ErrorCode::PerturbationFailed:
      return CYLT_ERR_PERTURBATION_FAILED;
    case ErrorCode::GuaranteeMissed:
      return CYLT_ERR_GUARANTEE_MISSED;
    case ErrorCode::GenerationFailed:
      return CYLT_ERR_GENERATION_FAILED;
    case ErrorCode::NotWellRounded:
      return CYLT_ERR_NOT_WELL_ROUNDED;
    case ErrorCode::NotPairwiseIntersectable:
      return CYLT_ERR_NOT_PAIRWISE_INTERSECTABLE;
    case ErrorCode::InsufficientResolution:
      return CYLT_ERR_INSUFFICIENT_RESOLUTION;
    case ErrorCode::PiercingFailure:
      return CYLT_ERR_PIERCING_FAILURE;
    case ErrorCode::Internal:
      return CYLT_ERR_INTERNAL;
  }
  return CYLT_ERR_INTERNAL;
}

template <typename Fn>
cylt_status guarded(Fn&& fn) {
  clear_error();
  try {
    return fn();
  } catch (const cylt::Error& e) {
    g_error_message = e.what();
    g_witness_a = e.witness_a();
    g_witness_b = e.witness_b();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_error_message = "out of memory";
    return CYLT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error_message = e.what();
    return CYLT_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cylt_status set_invalid(const char* message) {
  clear_error();
  g_error_message = message;
  return CYLT_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

void cylt_solve_options_init(cylt_solve_options* opts) {
  if (opts == nullptr) return;
  opts->seed = 0;
  opts->epsilon = cylt::kEps;
  opts->perturb = 1e-7;
  opts->jobs = 1;
}

const char* cylt_version(void) { return cylt::kVersion; }

cylt_status cylt_family_generate(const char* kind, int32_t n, uint64_t seed, double delta,
                                 double d_param, cylt_family** out) {
  if (kind == nullptr || out == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    cylt::GenSpec spec;
    spec.kind = cylt::gen_kind_from_name(kind);
    spec.n = n;
    spec.seed = seed;
    spec.delta = delta;
    spec.D = d_param;
    auto* handle = new cylt_family{cylt::generate_instance(spec)};
    *out = handle;
    return CYLT_OK;
  });
}

cylt_status cylt_family_from_json(const char* json_text, cylt_family** out) {
  if (json_text == nullptr || out == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    auto* handle = new cylt_family{cylt::instance_from_json(json_text)};
    *out = handle;
    return CYLT_OK;
  });
}

cylt_status cylt_family_to_json(const cylt_family* family, char** out_json) {
  if (family == nullptr || out_json == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    *out_json = copy_string(cylt::instance_to_json(family->file));
    return CYLT_OK;
  });
}

const char* cylt_family_kind(const cylt_family* family) {
  if (family == nullptr) return "";
  switch (family->file.kind) {
    case cylt::FileKind::Family:
      return "family";
    case cylt::FileKind::Bipartite:
      return "bipartite";
    case cylt::FileKind::Rounded:
      return "rounded";
  }
  return "";
}

int32_t cylt_family_count(const cylt_family* family) {
  if (family == nullptr) return 0;
  switch (family->file.kind) {
    case cylt::FileKind::Family:
      return static_cast<int32_t>(family->file.cylinders.size());
    case cylt::FileKind::Bipartite:
      return static_cast<int32_t>(family->file.f.size() + family->file.g.size());
    case cylt::FileKind::Rounded:
      return static_cast<int32_t>(family->file.bodies.size());
  }
  return 0;
}

void cylt_family_free(cylt_family* family) { delete family; }

cylt_status cylt_solve(const cylt_family* family, const cylt_solve_options* opts,
                       cylt_report** out) {
  if (family == nullptr || out == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    cylt::SolveOptions options;
    if (opts != nullptr) {
      options.seed = opts->seed;
      options.epsilon = opts->epsilon;
      options.perturb = opts->perturb;
      options.jobs = opts->jobs;
    }
    cylt::TransversalReport report;
    bool verified = false;
    if (family->file.kind == cylt::FileKind::Family) {
      report = cylt::solve(family->file.cylinders, options);
      verified = cylt::verify_report(family->file.cylinders, report, options.epsilon, options.jobs);
    } else if (family->file.kind == cylt::FileKind::Bipartite) {
      report = cylt::solve_bipartite(family->file.f, family->file.g, options);
      verified =
          cylt::verify_report(family->file.f, family->file.g, report, options.epsilon, options.jobs);
    } else {
      throw cylt::Error(cylt::ErrorCode::InvalidArgument,
                        "rounded instances are solved with cylt_cover_rounded");
    }
    *out = new cylt_report{std::move(report), verified};
    return CYLT_OK;
  });
}

cylt_status cylt_cover_rounded(const cylt_family* family, int32_t lenient, cylt_report** out) {
  if (family == nullptr || out == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    if (family->file.kind != cylt::FileKind::Rounded) {
      throw cylt::Error(cylt::ErrorCode::InvalidArgument, "expected a rounded instance");
    }
    cylt::LineCover cover = cylt::cover_lines(family->file.bodies, family->file.D, lenient != 0);
    const bool verified = cylt::verify_cover(family->file.bodies, cover);
    *out = new cylt_report{std::move(cover), verified};
    return CYLT_OK;
  });
}

cylt_status cylt_report_from_json(const char* json_text, cylt_report** out) {
  if (json_text == nullptr || out == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    const std::string text = json_text;
    if (text.find("\"cover_report\"") != std::string::npos) {
      *out = new cylt_report{cylt::cover_from_json(text), false};
    } else {
      *out = new cylt_report{cylt::report_from_json(text), false};
    }
    return CYLT_OK;
  });
}

cylt_status cylt_report_to_json(const cylt_report* report, char** out_json) {
  if (report == nullptr || out_json == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    if (report->is_cover()) {
      *out_json = copy_string(
          cylt::cover_to_json(std::get<cylt::LineCover>(report->payload), report->verified));
    } else {
      *out_json = copy_string(cylt::report_to_json(
          std::get<cylt::TransversalReport>(report->payload), report->verified));
    }
    return CYLT_OK;
  });
}

const char* cylt_report_branch(const cylt_report* report) {
  if (report == nullptr) return "";
  if (report->is_cover()) return "Cover";
  return cylt::branch_name(std::get<cylt::TransversalReport>(report->payload).branch);
}

int32_t cylt_report_hits(const cylt_report* report) {
  if (report == nullptr || report->is_cover()) return -1;
  const auto& rep = std::get<cylt::TransversalReport>(report->payload);
  if (rep.bipartite) {
    return static_cast<int32_t>(rep.side == 'f' ? rep.hits_f.size() : rep.hits_g.size());
  }
  return static_cast<int32_t>(rep.hits.size());
}

int32_t cylt_report_bound(const cylt_report* report) {
  if (report == nullptr) return -1;
  if (report->is_cover()) {
    const auto& cover = std::get<cylt::LineCover>(report->payload);
    return static_cast<int32_t>(32.0 * cover.D * cover.D);
  }
  return std::get<cylt::TransversalReport>(report->payload).bound;
}

int32_t cylt_report_line_count(const cylt_report* report) {
  if (report == nullptr || !report->is_cover()) return -1;
  return static_cast<int32_t>(std::get<cylt::LineCover>(report->payload).directions.size());
}

int32_t cylt_report_n(const cylt_report* report) {
  if (report == nullptr || report->is_cover()) return -1;
  const auto& rep = std::get<cylt::TransversalReport>(report->payload);
  return rep.bipartite ? rep.nf : rep.n;
}

const char* cylt_report_side(const cylt_report* report) {
  if (report == nullptr || report->is_cover()) return "";
  const auto& rep = std::get<cylt::TransversalReport>(report->payload);
  if (!rep.bipartite) return "";
  return rep.side == 'f' ? "f" : "g";
}

void cylt_report_free(cylt_report* report) { delete report; }

cylt_status cylt_verify(const cylt_family* family, const cylt_report* report, int32_t jobs,
                        int32_t* recomputed_hits) {
  if (family == nullptr || report == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    if (recomputed_hits != nullptr) *recomputed_hits = 0;
    bool ok = false;
    int32_t count = 0;
    if (report->is_cover()) {
      if (family->file.kind != cylt::FileKind::Rounded) {
        throw cylt::Error(cylt::ErrorCode::InvalidArgument, "cover report needs a rounded instance");
      }
      const auto& cover = std::get<cylt::LineCover>(report->payload);
      ok = cylt::verify_cover(family->file.bodies, cover);
      count = static_cast<int32_t>(cover.directions.size());
    } else {
      const auto& rep = std::get<cylt::TransversalReport>(report->payload);
      if (family->file.kind == cylt::FileKind::Family) {
        ok = cylt::verify_report(family->file.cylinders, rep, cylt::kEps, jobs);
        count = static_cast<int32_t>(rep.hits.size());
      } else if (family->file.kind == cylt::FileKind::Bipartite) {
        ok = cylt::verify_report(family->file.f, family->file.g, rep, cylt::kEps, jobs);
        count = static_cast<int32_t>(rep.side == 'f' ? rep.hits_f.size() : rep.hits_g.size());
      } else {
        throw cylt::Error(cylt::ErrorCode::InvalidArgument,
                          "transversal report needs a family or bipartite instance");
      }
    }
    if (recomputed_hits != nullptr) *recomputed_hits = count;
    if (!ok) {
      g_error_message = "report does not verify against the instance";
      return CYLT_ERR_VERIFY_FAILED;
    }
    return CYLT_OK;
  });
}

cylt_status cylt_pierce(const char* polygon_json, int32_t trials, uint64_t seed, char** out_svg,
                        int32_t* out_points, int32_t* out_failures) {
  if (polygon_json == nullptr || out_svg == nullptr) return set_invalid("null argument");
  return guarded([&]() {
    const cylt::ConvexPolygon poly = cylt::polygon_from_json(polygon_json);
    const cylt::PiercingSet pierce = cylt::piercing_points(poly);
    const std::vector<cylt::Slab2> failures =
        cylt::verify_piercing(poly, pierce, trials, seed);
    if (out_points != nullptr) *out_points = static_cast<int32_t>(pierce.points.size());
    if (out_failures != nullptr) *out_failures = static_cast<int32_t>(failures.size());
    *out_svg = copy_string(cylt::render_piercing_svg(poly, pierce, failures));
    return CYLT_OK;
  });
}

void cylt_string_free(char* s) { delete[] s; }

const char* cylt_last_error_message(void) { return g_error_message.c_str(); }

void cylt_last_error_witness(int32_t* a, int32_t* b) {
  if (a != nullptr) *a = g_witness_a;
  if (b != nullptr) *b = g_witness_b;
}

}  // extern "C"
