// Copyright 2026 The pairbound Authors.
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

/*
 * C interface to pairbound.
 *
 * Every object is an opaque handle created by a pb_*_create/parse/from
 * function and released by the matching pb_*_free. Functions report failure
 * through pb_status; the message of the most recent failure on the calling
 * thread is available from pb_last_error(). Strings returned through `char**`
 * are owned by the caller and released with pb_string_free.
 *
 * Indices into an input are one-based, matching the "(i,j)" text form.
 */

#ifndef PAIRBOUND_PAIRBOUND_H_
#define PAIRBOUND_PAIRBOUND_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PAIRBOUND_BUILDING_LIBRARY)
#define PAIRBOUND_API __attribute__((visibility("default")))
#else
#define PAIRBOUND_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pb_status {
  PB_OK = 0,
  PB_VERIFICATION_FAILED = 1,
  PB_PARSE_ERROR = 2,
  /* Infeasible witness, index-range mismatch, exhaustive cap exceeded. */
  PB_PRECONDITION = 3,
  /* A bounding theorem failed to hold. Indicates a defect; pb_last_error()
     carries a state dump. */
  PB_THEOREM_VIOLATION = 4,
  PB_INVALID_ARGUMENT = 5,
  PB_INTERNAL_ERROR = 6
} pb_status;

typedef enum pb_format {
  PB_FORMAT_MARKDOWN = 0,
  PB_FORMAT_JSON = 1,
  PB_FORMAT_PLAIN = 2
} pb_format;

typedef struct pb_dataset pb_dataset;
typedef struct pb_input pb_input;
typedef struct pb_matching pb_matching;
typedef struct pb_enumerator pb_enumerator;
typedef struct pb_certificate pb_certificate;

/* Passing 0 as `cap` selects this default. */
#define PB_DEFAULT_CAP 8

PAIRBOUND_API const char* pb_version(void);
PAIRBOUND_API const char* pb_status_name(pb_status status);
PAIRBOUND_API const char* pb_last_error(void);
PAIRBOUND_API void pb_string_free(char* s);

/* Ingestion. `op` is one of "add", "radd", "mul", "lexadd"; `dim` is the
   vector length for "lexadd" (0 infers it from the first literal). */
PAIRBOUND_API pb_status pb_dataset_from_values(const char* op, size_t dim, const char* values,
                                               pb_dataset** out);
/* CSV, or JSON lines for .jsonl/.ndjson/.json paths. JSON lines read only the
   first array unless `all_lines` is non-zero. */
PAIRBOUND_API pb_status pb_dataset_from_file(const char* op, size_t dim, const char* path,
                                             int all_lines, pb_dataset** out);
PAIRBOUND_API size_t pb_dataset_count(const pb_dataset* dataset);
/* Sorts dataset `index` into a new input handle. */
PAIRBOUND_API pb_status pb_dataset_input(const pb_dataset* dataset, size_t index,
                                         pb_input** out);
PAIRBOUND_API void pb_dataset_free(pb_dataset* dataset);

PAIRBOUND_API pb_status pb_input_from_values(const char* op, size_t dim, const char* values,
                                             pb_input** out);
/* Number of pairs, i.e. half the element count. */
PAIRBOUND_API size_t pb_input_n(const pb_input* input);
PAIRBOUND_API pb_status pb_input_element(const pb_input* input, size_t index, char** out);
PAIRBOUND_API pb_status pb_input_carrier(const pb_input* input, char** out);
PAIRBOUND_API void pb_input_free(pb_input* input);

PAIRBOUND_API pb_status pb_matching_parse(const char* text, pb_matching** out);
PAIRBOUND_API pb_status pb_matching_symmetric(size_t n, pb_matching** out);
PAIRBOUND_API size_t pb_matching_n(const pb_matching* m);
PAIRBOUND_API pb_status pb_matching_to_string(const pb_matching* m, char** out);
PAIRBOUND_API void pb_matching_free(pb_matching* m);

/* Streams canonical matchings in enumeration order. */
PAIRBOUND_API pb_status pb_enumerator_create(size_t n, pb_enumerator** out);
/* Returns 1 and sets *current to a borrowed handle (valid until the next call
   or pb_enumerator_free), or 0 once exhausted. */
PAIRBOUND_API int pb_enumerator_next(pb_enumerator* e, const pb_matching** current);
PAIRBOUND_API void pb_enumerator_free(pb_enumerator* e);

/* (2n-1)!! as a decimal string. */
PAIRBOUND_API pb_status pb_count_matchings(size_t n, char** out);

/* `direction` is "upper" or "lower"; `bound` uses the input's literal form. */
PAIRBOUND_API pb_status pb_feasible(const pb_input* input, const char* bound,
                                    const char* direction, const pb_matching* m, int* out);

PAIRBOUND_API pb_status pb_render_table(const pb_input* input, pb_format format, size_t cap,
                                        char** out);

/* Symmetric matching, its Max/Min and the brute-force optimality verdict.
   With a non-NULL `bound`, also reports feasibility of the symmetric matching
   and, given a `witness`, checks it is feasible first (PB_PRECONDITION if
   not). Returns PB_THEOREM_VIOLATION when the verdict fails; *out is still
   filled in that case. */
PAIRBOUND_API pb_status pb_solve(const pb_input* input, const char* bound, const char* direction,
                                 const pb_matching* witness, pb_format format, size_t cap,
                                 char** out);

PAIRBOUND_API pb_status pb_certify(const pb_input* input, const char* bound,
                                   const char* direction, const pb_matching* witness,
                                   pb_certificate** out);
PAIRBOUND_API pb_status pb_certificate_parse(const char* json, pb_certificate** out);
PAIRBOUND_API pb_status pb_certificate_load(const char* path, pb_certificate** out);
PAIRBOUND_API pb_status pb_certificate_to_json(const pb_certificate* cert, char** out);
PAIRBOUND_API size_t pb_certificate_step_count(const pb_certificate* cert);
/* PB_OK when valid. PB_VERIFICATION_FAILED otherwise, with the first failure
   in *reason when `reason` is non-NULL. */
PAIRBOUND_API pb_status pb_certificate_verify(const pb_certificate* cert, char** reason);
PAIRBOUND_API void pb_certificate_free(pb_certificate* cert);

/* Samples the carrier laws. `op` may be "all" (or NULL) for every built-in
   carrier; "lexadd" with dim 0 checks dimensions 1 to 3. */
PAIRBOUND_API pb_status pb_lawcheck(const char* op, size_t dim, size_t samples, uint64_t seed,
                                    pb_format format, char** out, size_t* violations);

#ifdef __cplusplus
}
#endif

#endif /* PAIRBOUND_PAIRBOUND_H_ */
