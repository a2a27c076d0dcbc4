/* C interface to the cylinder transversal solver. All functions return a
 * cylt_status; out-parameters are written only on CYLT_OK. Handles are
 * opaque and freed with their matching *_free function. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * cylt_string_free. The last failing call's detail is available per thread
 * via cylt_last_error_message / cylt_last_error_witness. */

#ifndef CYLTRANS_H
#define CYLTRANS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CYLT_API __declspec(dllexport)
#else
#define CYLT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cylt_status {
  CYLT_OK = 0,
  CYLT_ERR_INVALID_ARGUMENT = 1,
  CYLT_ERR_PARSE = 2,
  CYLT_ERR_EMPTY_INPUT = 3,
  CYLT_ERR_ZERO_DIRECTION = 4,
  CYLT_ERR_PARALLEL_AXES = 5,
  CYLT_ERR_NOT_PAIRWISE_INTERSECTING = 6,
  CYLT_ERR_NOT_CROSS_INTERSECTING = 7,
  CYLT_ERR_PERTURBATION_FAILED = 8,
  CYLT_ERR_GUARANTEE_MISSED = 9,
  CYLT_ERR_GENERATION_FAILED = 10,
  CYLT_ERR_NOT_WELL_ROUNDED = 11,
  CYLT_ERR_NOT_PAIRWISE_INTERSECTABLE = 12,
  CYLT_ERR_INSUFFICIENT_RESOLUTION = 13,
  CYLT_ERR_PIERCING_FAILURE = 14,
  CYLT_ERR_VERIFY_FAILED = 15,
  CYLT_ERR_INTERNAL = 16
} cylt_status;

/* An instance: a pairwise-intersecting family, a bipartite pair of families,
 * or a well-rounded body list, as loaded from or saved to JSON. */
typedef struct cylt_family cylt_family;

/* A solve result: either a transversal report or a line cover. */
typedef struct cylt_report cylt_report;

typedef struct cylt_solve_options {
  uint64_t seed;
  double epsilon;  /* incidence tolerance, default 1e-9 */
  double perturb;  /* direction perturbation magnitude in radians, default 1e-7 */
  int32_t jobs;    /* worker threads; never affects the result, default 1 */
} cylt_solve_options;

CYLT_API void cylt_solve_options_init(cylt_solve_options* opts);

CYLT_API const char* cylt_version(void);

/* kind: "common-point" | "coplanar-lines" | "hyperboloid" | "stack" | "rounded".
 * delta <= 0 selects the kind's default thickness; d_param is the rounding
 * parameter D for "rounded". */
CYLT_API cylt_status cylt_family_generate(const char* kind, int32_t n, uint64_t seed, double delta,
                                          double d_param, cylt_family** out);
CYLT_API cylt_status cylt_family_from_json(const char* json_text, cylt_family** out);
CYLT_API cylt_status cylt_family_to_json(const cylt_family* family, char** out_json);
/* "family" | "bipartite" | "rounded". */
CYLT_API const char* cylt_family_kind(const cylt_family* family);
/* Cylinder count (per side summed for bipartite) or body count. */
CYLT_API int32_t cylt_family_count(const cylt_family* family);
CYLT_API void cylt_family_free(cylt_family* family);

/* Transversal solve; the input must be a family or bipartite instance. */
CYLT_API cylt_status cylt_solve(const cylt_family* family, const cylt_solve_options* opts,
                                cylt_report** out);
/* Line cover; the input must be a rounded instance. `lenient` relaxes the
 * per-body distance precondition to the ball-implied bound. */
CYLT_API cylt_status cylt_cover_rounded(const cylt_family* family, int32_t lenient,
                                        cylt_report** out);

CYLT_API cylt_status cylt_report_from_json(const char* json_text, cylt_report** out);
CYLT_API cylt_status cylt_report_to_json(const cylt_report* report, char** out_json);
/* "EarlyExit" | "PlanarPiercing" | "DegenerateSegment" | "Cover". */
CYLT_API const char* cylt_report_branch(const cylt_report* report);
/* Guaranteed-side hit count (total hits for single-family reports). */
CYLT_API int32_t cylt_report_hits(const cylt_report* report);
CYLT_API int32_t cylt_report_bound(const cylt_report* report);
/* Direction count of a cover report, -1 otherwise. */
CYLT_API int32_t cylt_report_line_count(const cylt_report* report);
/* Class size n (single-family) or per-side n (bipartite), -1 for covers. */
CYLT_API int32_t cylt_report_n(const cylt_report* report);
/* "f" or "g" for a bipartite report (the class the guarantee is on), ""
 * otherwise. */
CYLT_API const char* cylt_report_side(const cylt_report* report);
CYLT_API void cylt_report_free(cylt_report* report);

/* Recomputes the report against the instance. CYLT_OK when it checks out,
 * CYLT_ERR_VERIFY_FAILED when it does not; recomputed_hits (optional) gets
 * the recomputed hit/line count either way. */
CYLT_API cylt_status cylt_verify(const cylt_family* family, const cylt_report* report,
                                 int32_t jobs, int32_t* recomputed_hits);

/* Piercing construction for a {"kind":"polygon"} JSON text: runs the
 * slab-sampling check (`trials` samples) and renders an SVG diagnostic.
 * out_points gets |T|, out_failures the number of unpierced sampled slabs. */
CYLT_API cylt_status cylt_pierce(const char* polygon_json, int32_t trials, uint64_t seed,
                                 char** out_svg, int32_t* out_points, int32_t* out_failures);

CYLT_API void cylt_string_free(char* s);

CYLT_API const char* cylt_last_error_message(void);
/* Offending indices of the last pair/body validation failure, -1 when none. */
CYLT_API void cylt_last_error_witness(int32_t* a, int32_t* b);

#ifdef __cplusplus
}
#endif

#endif /* CYLTRANS_H */
