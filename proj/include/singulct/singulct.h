#ifndef SINGULCT_SINGULCT_H
#define SINGULCT_SINGULCT_H

#include <stddef.h>
#include <stdint.h>

#if defined(SINGULCT_BUILDING_LIBRARY)
#define SINGULCT_API __attribute__((visibility("default")))
#else
#define SINGULCT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum singulct_status {
  SINGULCT_OK = 0,
  /* null handle, unknown option key, malformed option value */
  SINGULCT_ERR_INVALID_ARGUMENT = 1,
  /* malformed polynomial text */
  SINGULCT_ERR_PARSE = 2,
  /* input outside the supported domain (unsupported shape, non-prime, ...) */
  SINGULCT_ERR_DOMAIN = 3,
  /* an enumeration would exceed the point budget */
  SINGULCT_ERR_BUDGET = 4,
  /* a bounded search ended without a certificate */
  SINGULCT_ERR_INCONCLUSIVE = 5,
  SINGULCT_ERR_IO = 6,
  SINGULCT_ERR_INTERNAL = 7
} singulct_status;

typedef enum singulct_verdict {
  SINGULCT_VERDICT_PASS = 0,
  SINGULCT_VERDICT_FAIL = 1,
  SINGULCT_VERDICT_INCONCLUSIVE = 2
} singulct_verdict;

typedef enum singulct_format { SINGULCT_FORMAT_JSON = 0, SINGULCT_FORMAT_CSV = 1 } singulct_format;

typedef struct singulct_config singulct_config;
typedef struct singulct_poly singulct_poly;
typedef struct singulct_report singulct_report;

SINGULCT_API const char* singulct_version(void);
SINGULCT_API const char* singulct_status_name(singulct_status status);
/* Message of the last failed call on this thread; "" if none. Valid until the next call. */
SINGULCT_API const char* singulct_last_error(void);
/* Frees strings returned through char** out-parameters. Handle and string
 * out-parameters are set to NULL when a call fails. */
SINGULCT_API void singulct_string_free(char* text);

/* Run configuration. Keys (values are text):
 *   grid                  "diag:2,3;det:2"           family grid for thmB and report
 *   primes                "5,7"                      decay-profile primes
 *   max_level             "3"
 *   subscheme             "full" | "hyp" | "origin"
 *   twists                "default" | "all" | "<k>"
 *   epsilon, tolerance, bound_cap, localization_tolerance   positive reals
 *   budget                "100000000"                point budget
 *   threads               "0" (hardware concurrency)
 *   moi_poly, moi_vars    polynomial for the moi suite and its variables ("x1,x2")
 *   localization_primes   "5,7"
 *   localization_levels   "2,3"
 *   slope_family, slope_prime
 *   determinantal_bound   "4"
 *   milnor_mode           "exact" | "modular"
 *   milnor                "on" | "off"
 * The budget defaults to SINGULCT_BUDGET from the environment when set. */
SINGULCT_API singulct_status singulct_config_create(singulct_config** out);
SINGULCT_API void singulct_config_destroy(singulct_config* config);
SINGULCT_API singulct_status singulct_config_set(singulct_config* config, const char* key, const char* value);

/* Polynomial over Q. `vars` is a comma-separated list; NULL or "" takes the
 * identifiers of `text` in order of first appearance. */
SINGULCT_API singulct_status singulct_poly_parse(const char* text, const char* vars, singulct_poly** out);
SINGULCT_API void singulct_poly_destroy(singulct_poly* poly);
SINGULCT_API size_t singulct_poly_variable_count(const singulct_poly* poly);
SINGULCT_API singulct_status singulct_poly_to_string(const singulct_poly* poly, char** out);
/* lct((f) + J_f^2) as "num/den" or "inf". */
SINGULCT_API singulct_status singulct_poly_lct_pair(const singulct_poly* poly, char** out);
SINGULCT_API singulct_status singulct_poly_milnor(const singulct_poly* poly, uint64_t* out);
/* E(p^m) with the given twist over the subscheme preset ("full", "hyp", "origin").
 * A budget of 0 means SINGULCT_BUDGET, or 10^8 points. */
SINGULCT_API singulct_status singulct_poly_exp_sum(const singulct_poly* poly, uint64_t prime, unsigned level,
                                                   int64_t twist, const char* subscheme, uint64_t budget,
                                                   double* re, double* im, int* exact_zero);

/* Report producers. `config` may be NULL for defaults. */
SINGULCT_API singulct_status singulct_run_family(const singulct_config* config, const char* family,
                                                 singulct_report** out);
SINGULCT_API singulct_status singulct_run_invariants(const singulct_config* config, const singulct_poly* poly,
                                                     singulct_report** out);
SINGULCT_API singulct_status singulct_run_expsum(const singulct_config* config, const singulct_poly* poly,
                                                 singulct_report** out);
/* suite: "thmB", "moi", "localization" or "pointcount". */
SINGULCT_API singulct_status singulct_run_verify(const singulct_config* config, const char* suite,
                                                 singulct_report** out);
/* Family grid, Theorem B, moi bound, localization and point-count checks. */
SINGULCT_API singulct_status singulct_run_report(const singulct_config* config, singulct_report** out);

SINGULCT_API singulct_verdict singulct_report_verdict(const singulct_report* report);
SINGULCT_API singulct_status singulct_report_render(const singulct_report* report, singulct_format format, char** out);
SINGULCT_API singulct_status singulct_report_write(const singulct_report* report, singulct_format format,
                                                   const char* path);
SINGULCT_API void singulct_report_destroy(singulct_report* report);

#ifdef __cplusplus
}
#endif

#endif
