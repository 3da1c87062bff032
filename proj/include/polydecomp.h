// Copyright 2026 The polydecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the polydecomp library.
 *
 * Objects are opaque handles; documents travel as UTF-8 JSON strings with
 * every rational written as a "p/q" string. Every function returns a
 * pd_status. On failure, pd_last_error() describes the most recent error on
 * the calling thread. Strings returned through `char** out` are owned by the
 * caller and must be released with pd_string_free().
 */
#ifndef POLYDECOMP_H_
#define POLYDECOMP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PD_API __declspec(dllexport)
#else
#define PD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_VERIFICATION_FAILED = 1, /* a requested check ran and did not pass */
  PD_INPUT_ERROR = 2,         /* malformed, unbounded, non-simple, ... */
  PD_PRECONDITION_ERROR = 3,  /* genericity / admissibility violated */
  PD_INTERNAL_ERROR = 4
} pd_status;

typedef enum pd_kind {
  PD_BRIANCHON_GRAM = 0,
  PD_LAWRENCE_VARCHENKO = 1,
  PD_WITTEN = 2
} pd_kind;

typedef enum pd_rho {
  PD_RHO_LINEAR = 0,
  PD_RHO_NORM_SQUARE = 1,
  PD_RHO_NEG_NORM_SQUARE = 2
} pd_rho;

/* Pointwise span policy for pd_verify. */
typedef enum pd_span_policy {
  PD_SPANS_DEFAULT = -1, /* probe boundaries for BG, avoid spans otherwise */
  PD_SPANS_PROBE = 0,
  PD_SPANS_AVOID = 1
} pd_span_policy;

typedef struct pd_polytope pd_polytope;
typedef struct pd_decomposition pd_decomposition;

PD_API const char* pd_version(void);

/* Message of the last failing call on this thread ("" if none). */
PD_API const char* pd_last_error(void);

/* Error-kind name of the last failing call, e.g. "NotSimple". */
PD_API const char* pd_last_error_kind(void);

PD_API void pd_string_free(char* s);

/* Parses and validates a polytope document. */
PD_API pd_status pd_polytope_parse(const char* document, pd_polytope** out);
PD_API void pd_polytope_free(pd_polytope* p);
PD_API int pd_polytope_dim(const pd_polytope* p);
PD_API pd_status pd_polytope_to_json(const pd_polytope* p, char** out);
PD_API pd_status pd_polytope_faces(const pd_polytope* p, char** out);

/* Builds a decomposition. `parameter` holds `count` rational strings: eta for
 * PD_LAWRENCE_VARCHENKO, the center for PD_WITTEN, ignored for BG. */
PD_API pd_status pd_decompose(const pd_polytope* p, pd_kind kind,
                              const char* const* parameter, size_t count,
                              pd_decomposition** out);
PD_API pd_status pd_decomposition_parse(const char* document,
                                        pd_decomposition** out);
PD_API void pd_decomposition_free(pd_decomposition* d);
PD_API pd_status pd_decomposition_to_json(const pd_decomposition* d,
                                          char** out);

/* Runs the pointwise check on `points` samples and the measure check on
 * `boxes` boxes. Writes {"pointwise":..., "measure":..., "pass":...} and
 * returns PD_VERIFICATION_FAILED when either check fails. */
PD_API pd_status pd_verify(const pd_polytope* p, const pd_decomposition* d,
                           int points, int boxes, uint64_t seed,
                           pd_span_policy spans, char** out);

/* Localizing-set table for rho given by `count` rational strings. */
PD_API pd_status pd_localize(const pd_polytope* p, pd_rho rho,
                             const char* const* vector, size_t count,
                             char** out);

/* Admissibility of a center on every face. Returns PD_VERIFICATION_FAILED
 * when some face fails. */
PD_API pd_status pd_check_assumption(const pd_polytope* p,
                                     const char* const* center, size_t count,
                                     char** out);

/* Searches an admissible center. Returns PD_VERIFICATION_FAILED (with a
 * {"found": false, ...} document) when none exists in the search box. */
PD_API pd_status pd_admissible_center(const pd_polytope* p, char** out);

/* Emits Morse data and verifies it. With `data` non-NULL the given Morse
 * data document is verified instead; with `center` non-NULL (and `data`
 * NULL) norm-square data for that center is produced. Returns
 * PD_VERIFICATION_FAILED when violations are found. */
PD_API pd_status pd_morse_data(const pd_polytope* p, const char* data,
                               const char* const* center, size_t count,
                               char** out);

/* The interval example of the circle action on the 2-sphere. */
PD_API pd_status pd_example_s2(char** out);

#ifdef __cplusplus
}
#endif

#endif /* POLYDECOMP_H_ */
