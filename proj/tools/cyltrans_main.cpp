// Command-line front end; talks to the solver only through the C API.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cyltrans.h"

namespace {

// Exit codes: 0 ok, 2 I/O or parse, 3 generation failed, 4 disjoint pair,
// 5 guarantee missed, 6 verification mismatch, 7 piercing oracle failure,
// 8 not well-rounded / body too far, 1 anything else.
int exit_code_for(cylt_status status) {
  switch (status) {
    case CYLT_OK:
      return 0;
    case CYLT_ERR_PARSE:
    case CYLT_ERR_INVALID_ARGUMENT:
    case CYLT_ERR_EMPTY_INPUT:
    case CYLT_ERR_ZERO_DIRECTION:
      return 2;
    case CYLT_ERR_GENERATION_FAILED:
      return 3;
    case CYLT_ERR_NOT_PAIRWISE_INTERSECTING:
    case CYLT_ERR_NOT_CROSS_INTERSECTING:
      return 4;
    case CYLT_ERR_GUARANTEE_MISSED:
    case CYLT_ERR_PERTURBATION_FAILED:
      return 5;
    case CYLT_ERR_VERIFY_FAILED:
      return 6;
    case CYLT_ERR_PIERCING_FAILURE:
      return 7;
    case CYLT_ERR_NOT_WELL_ROUNDED:
    case CYLT_ERR_NOT_PAIRWISE_INTERSECTABLE:
      return 8;
    default:
      return 1;
  }
}

int fail(cylt_status status) {
  int32_t wa = -1, wb = -1;
  cylt_last_error_witness(&wa, &wb);
  if (wa >= 0 && wb >= 0) {
    std::fprintf(stderr, "error: %s (witness pair (%d,%d))\n", cylt_last_error_message(), wa, wb);
  } else if (wa >= 0) {
    std::fprintf(stderr, "error: %s (index %d)\n", cylt_last_error_message(), wa);
  } else {
    std::fprintf(stderr, "error: %s\n", cylt_last_error_message());
  }
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return in.good() || in.eof();
}

// Written in one shot after the command succeeded, so failures leave no
// partial file behind.
bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  out.flush();
  return out.good();
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { cylt_string_free(s); }
};

struct FamilyGuard {
  cylt_family* f = nullptr;
  ~FamilyGuard() { cylt_family_free(f); }
};

struct ReportGuard {
  cylt_report* r = nullptr;
  ~ReportGuard() { cylt_report_free(r); }
};

int io_error(const std::string& path, const char* verb) {
  std::fprintf(stderr, "error: cannot %s %s\n", verb, path.c_str());
  return 2;
}

int load_family(const std::string& path, FamilyGuard* family) {
  std::string text;
  if (!read_file(path, &text)) return io_error(path, "read");
  const cylt_status status = cylt_family_from_json(text.c_str(), &family->f);
  if (status != CYLT_OK) return fail(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line transversals for pairwise intersecting cylinders"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  std::string gen_kind = "common-point";
  int gen_n = 1;
  uint64_t gen_seed = 0;
  double gen_delta = 0.0;
  double gen_d = 1.0;
  std::string gen_out;
  gen->add_option("--kind", gen_kind,
                  "common-point | coplanar-lines | hyperboloid | stack | rounded")
      ->required();
  gen->add_option("--n", gen_n, "family size (per side for hyperboloid)")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--delta", gen_delta, "cross-section thickness (0 = kind default)");
  gen->add_option("--d", gen_d, "rounding parameter D for --kind rounded");
  gen->add_option("-o,--out", gen_out, "output path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Find a guaranteed transversal line");
  std::string solve_in, solve_out;
  cylt_solve_options opts;
  cylt_solve_options_init(&opts);
  solve->add_option("input", solve_in, "family or bipartite JSON file")->required();
  solve->add_option("-o,--out", solve_out, "report output path")->required();
  solve->add_option("--seed", opts.seed, "perturbation seed");
  solve->add_option("--epsilon", opts.epsilon, "incidence tolerance");
  solve->add_option("--perturb", opts.perturb, "perturbation magnitude (radians)");
  solve->add_option("--jobs", opts.jobs, "worker threads (does not affect output)");

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a report against its instance");
  std::string verify_family, verify_report_path;
  int verify_jobs = 1;
  verify->add_option("family", verify_family, "instance JSON file")->required();
  verify->add_option("report", verify_report_path, "report JSON file")->required();
  verify->add_option("--jobs", verify_jobs, "worker threads");

  // pierce
  auto* pierce = app.add_subcommand("pierce", "Piercing construction + SVG diagnostic");
  std::string pierce_in, pierce_out;
  int pierce_trials = 10000;
  uint64_t pierce_seed = 0;
  pierce->add_option("input", pierce_in, "polygon JSON file")->required();
  pierce->add_option("-o,--out", pierce_out, "SVG output path")->required();
  pierce->add_option("--trials", pierce_trials, "slab samples for the piercing check");
  pierce->add_option("--seed", pierce_seed, "sampler seed");

  // cover-rounded
  auto* cover = app.add_subcommand("cover-rounded", "Line cover for well-rounded bodies");
  std::string cover_in, cover_out;
  bool cover_lenient = false;
  cover->add_option("input", cover_in, "rounded JSON file")->required();
  cover->add_option("-o,--out", cover_out, "report output path")->required();
  cover->add_flag("--lenient", cover_lenient, "relax the distance precondition to the ball bound");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    FamilyGuard family;
    const cylt_status status =
        cylt_family_generate(gen_kind.c_str(), gen_n, gen_seed, gen_delta, gen_d, &family.f);
    if (status != CYLT_OK) return fail(status);
    StringGuard json;
    const cylt_status dump = cylt_family_to_json(family.f, &json.s);
    if (dump != CYLT_OK) return fail(dump);
    if (!write_file(gen_out, std::string(json.s) + "\n")) return io_error(gen_out, "write");
    std::printf("wrote=%s kind=%s n=%d\n", gen_out.c_str(), cylt_family_kind(family.f), gen_n);
    return 0;
  }

  if (solve->parsed()) {
    FamilyGuard family;
    if (const int rc = load_family(solve_in, &family); rc != 0) return rc;
    ReportGuard report;
    const auto t0 = std::chrono::steady_clock::now();
    const cylt_status status = cylt_solve(family.f, &opts, &report.r);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (status != CYLT_OK) return fail(status);
    std::fprintf(stderr, "timing_ms=%.3f\n", ms);
    StringGuard json;
    const cylt_status dump = cylt_report_to_json(report.r, &json.s);
    if (dump != CYLT_OK) return fail(dump);
    if (!write_file(solve_out, std::string(json.s) + "\n")) return io_error(solve_out, "write");
    const char* side = cylt_report_side(report.r);
    if (side[0] != '\0') {
      std::printf("n=%d branch=%s hits=%d bound=%d side=%s\n", cylt_report_n(report.r),
                  cylt_report_branch(report.r), cylt_report_hits(report.r),
                  cylt_report_bound(report.r), side);
    } else {
      std::printf("n=%d branch=%s hits=%d bound=%d\n", cylt_report_n(report.r),
                  cylt_report_branch(report.r), cylt_report_hits(report.r),
                  cylt_report_bound(report.r));
    }
    return 0;
  }

  if (verify->parsed()) {
    FamilyGuard family;
    if (const int rc = load_family(verify_family, &family); rc != 0) return rc;
    std::string text;
    if (!read_file(verify_report_path, &text)) return io_error(verify_report_path, "read");
    ReportGuard report;
    const cylt_status parse = cylt_report_from_json(text.c_str(), &report.r);
    if (parse != CYLT_OK) return fail(parse);
    int32_t recomputed = 0;
    const cylt_status status = cylt_verify(family.f, report.r, verify_jobs, &recomputed);
    std::printf("recomputed_hits=%d ok=%d\n", recomputed, status == CYLT_OK ? 1 : 0);
    if (status != CYLT_OK) return fail(status);
    return 0;
  }

  if (pierce->parsed()) {
    std::string text;
    if (!read_file(pierce_in, &text)) return io_error(pierce_in, "read");
    StringGuard svg;
    int32_t points = 0, failures = 0;
    const cylt_status status =
        cylt_pierce(text.c_str(), pierce_trials, pierce_seed, &svg.s, &points, &failures);
    if (status != CYLT_OK) return fail(status);
    if (!write_file(pierce_out, svg.s)) return io_error(pierce_out, "write");
    std::printf("|T|=%d failures=%d\n", points, failures);
    return failures == 0 ? 0 : 7;
  }

  if (cover->parsed()) {
    FamilyGuard family;
    if (const int rc = load_family(cover_in, &family); rc != 0) return rc;
    ReportGuard report;
    const auto t0 = std::chrono::steady_clock::now();
    const cylt_status status = cylt_cover_rounded(family.f, cover_lenient ? 1 : 0, &report.r);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (status != CYLT_OK) return fail(status);
    std::fprintf(stderr, "timing_ms=%.3f\n", ms);
    StringGuard json;
    const cylt_status dump = cylt_report_to_json(report.r, &json.s);
    if (dump != CYLT_OK) return fail(dump);
    if (!write_file(cover_out, std::string(json.s) + "\n")) return io_error(cover_out, "write");
    std::printf("lines=%d bound=%d\n", cylt_report_line_count(report.r),
                cylt_report_bound(report.r));
    return 0;
  }

  return 1;
}
