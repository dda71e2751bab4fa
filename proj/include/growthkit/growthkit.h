// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GROWTHKIT_GROWTHKIT_H_
#define GROWTHKIT_GROWTHKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(GK_BUILDING_LIBRARY)
#define GK_API __attribute__((visibility("default")))
#else
#define GK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gk_status {
  GK_OK = 0,
  GK_ERR_INVALID_VALUE,
  GK_ERR_DOMAIN,
  GK_ERR_OVERFLOW,
  GK_ERR_SYNTAX,
  GK_ERR_NEGATIVE_COEFFICIENT,
  GK_ERR_CONSTANT_FUNCTION,
  GK_ERR_ADMISSIBILITY,
  GK_ERR_GUARD_RADIUS,
  GK_ERR_NONPOSITIVE_ARGUMENT,
  GK_ERR_INDETERMINATE,
  GK_ERR_NOT_FOUND,
  GK_ERR_HYPOTHESIS_VIOLATED,
  GK_ERR_CONFIG,
  GK_ERR_NULL_ARGUMENT,
  GK_ERR_INTERNAL
} gk_status;

typedef enum gk_class {
  GK_CLASS_FINITE = 0,
  GK_CLASS_INFINITY,
  GK_CLASS_ZERO,
  GK_CLASS_UNIT,
  GK_CLASS_UNSETTLED
} gk_class;

typedef enum gk_verdict {
  GK_VERDICT_PASS = 0,
  GK_VERDICT_FAIL,
  GK_VERDICT_INCONCLUSIVE,
  GK_VERDICT_HYPOTHESIS_VIOLATED
} gk_verdict;

typedef enum gk_format { GK_FORMAT_CSV = 0, GK_FORMAT_JSON, GK_FORMAT_TABLE } gk_format;

/* Opaque handles. */
typedef struct gk_function gk_function;
typedef struct gk_suite_result gk_suite_result;

typedef struct gk_grid {
  double t0;
  double beta;
  int points;
  double tail;
} gk_grid;

typedef struct gk_tolerances {
  double conv_tol; /* <= 0 selects the default for the objects involved */
  double slope_tol;
  double huge;
  double tiny;
} gk_tolerances;

typedef struct gk_estimate {
  gk_class cls;
  double value;
  double sup_tail;
  double inf_tail;
  double slope;
  double conv_tol;
  size_t points;
  int absorbed;
} gk_estimate;

typedef struct gk_interval {
  double lo;
  double hi;
} gk_interval;

typedef struct gk_sandwich {
  double r;
  gk_interval lower;
  gk_interval middle;
  gk_interval upper;
  gk_verdict verdict;
  int truncation;
} gk_sandwich;

typedef struct gk_summary {
  int reports;
  int rows;
  int pass;
  int fail;
  int inconclusive;
  int hypothesis_violated;
} gk_summary;

typedef struct gk_suite_config {
  const char* suite;      /* "default" or "regular"; NULL selects "default" */
  const int* theorems;    /* theorem ids to keep; NULL or empty keeps all */
  size_t theorem_count;
  uint64_t seed;
  gk_grid grid;
  gk_tolerances tol;
  int regular_count;
  int corrupt_bound;
  unsigned threads;       /* 0 selects the hardware concurrency */
  /* When both are set, the suite is one custom instance per listed theorem. */
  const gk_function* f;
  const gk_function* g;
  /* Optional comparators for ratio theorems; both or neither. */
  const gk_function* h;
  const gk_function* k;
} gk_suite_config;

GK_API const char* gk_version(void);
GK_API const char* gk_status_name(gk_status status);
GK_API const char* gk_class_name(gk_class cls);
GK_API const char* gk_verdict_name(gk_verdict verdict);

/* Message of the last failing call on this thread; empty after success. */
GK_API const char* gk_last_error(void);
/* 1-based position of the last syntax error on this thread, 0 otherwise. */
GK_API int gk_last_error_line(void);
GK_API int gk_last_error_column(void);

/* Frees strings returned through char** out-parameters. */
GK_API void gk_string_free(char* s);

GK_API void gk_grid_default(gk_grid* grid);
GK_API void gk_tolerances_default(gk_tolerances* tol);
GK_API void gk_suite_config_default(gk_suite_config* config);

/* Expressions */
GK_API gk_status gk_expr_canonical(const char* text, char** out);

/* Growth objects */
GK_API gk_status gk_function_from_expr(const char* text, gk_function** out);
/* gamma <= 0 selects the default block schedule. */
GK_API gk_status gk_function_from_profile(int p, int q, double rho, double lambda, double t0,
                                          double gamma, gk_function** out);
GK_API gk_status gk_function_comparator(unsigned height, gk_function** out);
GK_API void gk_function_free(gk_function* f);
GK_API gk_status gk_function_describe(const gk_function* f, char** out);

/* Tower values are exchanged as text: "E^L(x)" or a plain decimal. */
GK_API gk_status gk_max_modulus(const gk_function* f, const char* r, char** out);
GK_API gk_status gk_inverse_max_modulus(const gk_function* f, const char* s, char** out);
GK_API gk_status gk_tower_to_double(const char* value, double* out);

/* Orders; NULL grid or tolerances select the defaults. */
GK_API gk_status gk_order(const gk_function* f, int p, int q, const gk_grid* grid,
                          const gk_tolerances* tol, gk_estimate* rho, gk_estimate* lambda);
GK_API gk_status gk_index_pair(const gk_function* f, int p_max, const gk_grid* grid,
                               const gk_tolerances* tol, int* p, int* q, gk_estimate* rho,
                               gk_estimate* lambda, int* regular);
GK_API gk_status gk_relative_order(const gk_function* f, const gk_function* g, int p, int q,
                                   const gk_grid* grid, const gk_tolerances* tol,
                                   gk_estimate* rho, gk_estimate* lambda);

/* Composition sandwich on expression pairs. truncation <= 0 selects 64. */
GK_API gk_status gk_sandwich_check(const char* f, const char* g, double r, int truncation,
                                   gk_sandwich* out);
GK_API gk_status gk_sandwich_format(const gk_sandwich* records, size_t count, gk_format format,
                                    char** out);

/* Verification suites */
GK_API gk_status gk_suite_run(const gk_suite_config* config, gk_suite_result** out);
GK_API void gk_suite_result_free(gk_suite_result* result);
GK_API gk_status gk_suite_result_summary(const gk_suite_result* result, gk_summary* out);
/* Largest spread of ratio-theorem chains. */
GK_API gk_status gk_suite_result_chain_spread(const gk_suite_result* result, double* out);
GK_API gk_status gk_suite_result_format(const gk_suite_result* result, gk_format format,
                                        const char* command, char** out);

/* Merges prior CSV or JSON artifacts; the summary counts rows. */
GK_API gk_status gk_report_aggregate(const char* const* artifacts, size_t count, gk_format format,
                                     char** out, gk_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* GROWTHKIT_GROWTHKIT_H_ */
