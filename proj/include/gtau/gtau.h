/* Copyright 2026 The gtau Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libgtau.
 *
 * Every fallible call returns a gtau_status. On failure the message is
 * available from gtau_last_error() on the calling thread until the next
 * call on that thread. Handles are opaque and released with their _free
 * function; strings returned from a handle live as long as the handle.
 */

#ifndef GTAU_GTAU_H
#define GTAU_GTAU_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GTAU_BUILDING)
#define GTAU_API __declspec(dllexport)
#else
#define GTAU_API __declspec(dllimport)
#endif
#else
#define GTAU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gtau_status {
  GTAU_OK = 0,
  GTAU_INVALID_ARGUMENT = 1,
  GTAU_CAP_EXCEEDED = 2,
  GTAU_INTERNAL = 3
} gtau_status;

typedef struct gtau_report gtau_report;
typedef struct gtau_class gtau_class;

GTAU_API const char* gtau_version(void);
GTAU_API const char* gtau_last_error(void);

/* Largest group order the brute-force enumerations accept. The initial
 * value comes from GTAU_ENUM_CAP, else 30000000. */
GTAU_API uint64_t gtau_enum_cap(void);
GTAU_API gtau_status gtau_set_enum_cap(uint64_t cap);

/* Reports: a list of JSON records plus an overall verdict. */
GTAU_API int gtau_report_passed(const gtau_report* r);
/* The first failure, or "" when the report passed. */
GTAU_API const char* gtau_report_failure(const gtau_report* r);
GTAU_API size_t gtau_report_size(const gtau_report* r);
/* Record i as a single-line JSON object; NULL when out of range. */
GTAU_API const char* gtau_report_record(const gtau_report* r, size_t i);
GTAU_API const char* gtau_report_json_lines(const gtau_report* r);
GTAU_API const char* gtau_report_csv(const gtau_report* r);
GTAU_API void gtau_report_free(gtau_report* r);

/* Class data in the text grammar, e.g. "n=2; GF(2):1,1,1:[1]". */
GTAU_API gtau_status gtau_class_parse(const char* text, gtau_class** out);
GTAU_API const char* gtau_class_text(const gtau_class* c);
GTAU_API int gtau_class_n(const gtau_class* c);
GTAU_API void gtau_class_free(gtau_class* c);

/* Exact values written into buf: rationals as "num/den" (always with a
 * denominator), counts as integers. When cap is
 * too small the call fails with GTAU_INVALID_ARGUMENT and *needed holds
 * the required size including the terminator. needed may be NULL. */
GTAU_API gtau_status gtau_prob_ggtau(const gtau_class* c, char* buf, size_t cap, size_t* needed);
GTAU_API gtau_status gtau_count_solutions(const gtau_class* c, char* buf, size_t cap, size_t* needed);
GTAU_API gtau_status gtau_prob_sp_class(const gtau_class* c, char* buf, size_t cap, size_t* needed);
GTAU_API gtau_status gtau_coset_class_count(int n, unsigned q, char* buf, size_t cap, size_t* needed);

/* Symmetric-function and q-series identities. name is one of newhall,
 * kawanaka, macident, machallsum, schursum, newhall-perturbed (vars and
 * deg apply), hallishall (deg bounds |lambda|, vars ignored), or euler,
 * qs1, qs2, qs3 (deg bounds n, vars ignored). */
GTAU_API gtau_status gtau_identity_verify(const char* name, int vars, int deg, gtau_report** out);

/* Per-class gg^tau statistics of GL(n, q). class_text NULL lists every
 * real class. */
GTAU_API gtau_status gtau_count(int n, unsigned q, const char* class_text, gtau_report** out);

/* Class totals of gg^tau. brute != 0 enumerates GL(n, q) and compares. */
GTAU_API gtau_status gtau_histogram(int n, unsigned q, int brute, gtau_report** out);

/* Brute |{g : gg^tau = 1}| against the closed product. */
GTAU_API gtau_status gtau_gow_macdonald(int n, unsigned q, gtau_report** out);

typedef enum gtau_classes_mode {
  GTAU_CLASSES_COSET = 0,
  GTAU_CLASSES_GL = 1,
  GTAU_CLASSES_TOTAL = 2,
  GTAU_CLASSES_BOUNDS = 3, /* n is the largest size checked */
  GTAU_CLASSES_ASY = 4     /* n = 2m or 2m + 1, tolerance 1% */
} gtau_classes_mode;

/* brute != 0 adds an enumeration cross-check for COSET (congruence
 * orbits), GL (class data enumeration) and TOTAL (extension classes). */
GTAU_API gtau_status gtau_classes(gtau_classes_mode mode, int n, unsigned q, int brute, gtau_report** out);

typedef enum gtau_sp_mode { GTAU_SP_UNIPOTENT = 0, GTAU_SP_STATS = 1 } gtau_sp_mode;

GTAU_API gtau_status gtau_sp(gtau_sp_mode mode, int n, unsigned q, gtau_report** out);

typedef enum gtau_measures_mode {
  GTAU_MEASURES_CHECK = 0,
  GTAU_MEASURES_SAMPLE = 1,
  GTAU_MEASURES_COMPARE = 2,
  GTAU_MEASURES_IDENTITY = 3
} gtau_measures_mode;

typedef struct gtau_measure_params {
  const char* family; /* "sp", "o-even", "o-odd" */
  const char* u;      /* rational in (0, 1], e.g. "1" or "1/2" */
  unsigned q;
  int cap;            /* CHECK: size cap; IDENTITY: u-degree */
  int n;              /* COMPARE: matrix size */
  long trials;        /* SAMPLE, COMPARE */
  uint64_t seed;      /* SAMPLE, COMPARE */
  int has_seed;       /* must be nonzero for SAMPLE and COMPARE */
} gtau_measure_params;

GTAU_API gtau_status gtau_measures(gtau_measures_mode mode, const gtau_measure_params* p, gtau_report** out);

typedef enum gtau_orbits_mode {
  GTAU_ORBITS_GL = 0,
  GTAU_ORBITS_SL = 1,
  GTAU_ORBITS_STABILIZERS = 2,
  GTAU_ORBITS_STRUCTURE = 3
} gtau_orbits_mode;

GTAU_API gtau_status gtau_orbits(gtau_orbits_mode mode, int n, unsigned q, gtau_report** out);

#ifdef __cplusplus
}
#endif

#endif /* GTAU_GTAU_H */
