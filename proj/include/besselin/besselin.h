/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BESSELIN_BESSELIN_H
#define BESSELIN_BESSELIN_H

/*
 * C interface to the besselin shared library.
 *
 * Every entry point returns a bl_status; outputs go through pointer
 * arguments and are only written on BL_OK. Handles are opaque and owned by
 * the caller, who releases them with the matching *_free function. Strings
 * returned through char** are heap allocated and released with
 * bl_string_free. After a failing call, bl_last_error() describes the
 * failure for the calling thread.
 *
 * Rational values cross this boundary as "p/q" or "p" decimal strings.
 */

#include <stddef.h>

#if defined(_WIN32)
#  define BESSELIN_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define BESSELIN_API __attribute__((visibility("default")))
#else
#  define BESSELIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bl_status {
  BL_OK = 0,
  BL_ERR_INVALID_ARGUMENT = 1,  /* null pointer, unknown enum, k out of range */
  BL_ERR_PARSE = 2,             /* malformed rational literal or table JSON */
  BL_ERR_POLE = 3,
  BL_ERR_DIVISION_BY_ZERO = 4,
  BL_ERR_NOT_POLYNOMIAL = 5,
  BL_ERR_LOWER_PARAMETER_POLE = 6,
  BL_ERR_DOMAIN = 7,
  BL_ERR_IDENTITY = 8,
  BL_ERR_INTERNAL = 9
} bl_status;

typedef enum bl_engine {
  BL_ENGINE_ORACLE = 0,
  BL_ENGINE_CLOSED_FORM = 1,
  BL_ENGINE_HYPERGEOMETRIC = 2
} bl_engine;

typedef enum bl_format { BL_FORMAT_TEXT = 0, BL_FORMAT_JSON = 1, BL_FORMAT_CSV = 2 } bl_format;

typedef enum bl_suite {
  BL_SUITE_ALL = 0,
  BL_SUITE_RECURRENCE = 1,
  BL_SUITE_ORACLE = 2,
  BL_SUITE_BERG_VIGNAT = 3,
  BL_SUITE_HYPERGEOMETRIC = 4
} bl_suite;

typedef struct bl_table_s* bl_table;
typedef struct bl_report_s* bl_report;

BESSELIN_API const char* bl_version(void);
BESSELIN_API const char* bl_status_string(bl_status status);
BESSELIN_API const char* bl_last_error(void);
BESSELIN_API void bl_string_free(char* s);

/* Name <-> enum helpers; return BL_ERR_INVALID_ARGUMENT for unknown names. */
BESSELIN_API bl_status bl_parse_engine(const char* name, bl_engine* out);
BESSELIN_API bl_status bl_parse_format(const char* name, bl_format* out);
BESSELIN_API bl_status bl_parse_suite(const char* name, bl_suite* out);

/* Canonical form of a rational literal ("6/4" -> "3/2"); BL_ERR_PARSE if malformed. */
BESSELIN_API bl_status bl_rational_normalize(const char* literal, char** out);

/* ---- linearization coefficient tables ---------------------------------- */

BESSELIN_API bl_status bl_table_create(int n, int m, bl_engine engine, bl_table* out);
/* New table with every coefficient evaluated at a1, a2 (rational literals). */
BESSELIN_API bl_status bl_table_evaluate(bl_table table, const char* a1, const char* a2,
                                         bl_table* out);
BESSELIN_API bl_status bl_table_from_json(const char* json, bl_table* out);
BESSELIN_API void bl_table_free(bl_table table);

BESSELIN_API bl_status bl_table_degrees(bl_table table, int* n, int* m);
/* Canonical text of beta_k. */
BESSELIN_API bl_status bl_table_coefficient(bl_table table, int k, char** out);
BESSELIN_API bl_status bl_table_render(bl_table table, bl_format format, char** out);
/* Sets *equal to 1 when both tables hold identical coefficients. */
BESSELIN_API bl_status bl_table_equal(bl_table a, bl_table b, int* equal);

/* ---- verification suites ----------------------------------------------- */

BESSELIN_API bl_status bl_verify(bl_suite suite, int max_n, int max_m, unsigned jobs,
                                 bl_report* out);
BESSELIN_API void bl_report_free(bl_report report);
BESSELIN_API bl_status bl_report_counts(bl_report report, size_t* pass, size_t* fail,
                                        size_t* notes);
BESSELIN_API bl_status bl_report_render(bl_report report, bl_format format, char** out);

/* ---- 3F2 -> 2F1 reduction ---------------------------------------------- */

/* Evaluates both sides at (n, m, k, a). *equal is 1 when every applicable
 * branch agrees with the right-hand side. BL_ERR_DOMAIN for a in {0, 1} or k
 * outside 0..n+m. */
BESSELIN_API bl_status bl_reduce(int n, int m, int k, const char* a, bl_format format,
                                 char** out, int* equal);

#ifdef __cplusplus
}
#endif

#endif /* BESSELIN_BESSELIN_H */
