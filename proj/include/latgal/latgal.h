/* SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the latgal shared library.
 *
 * Conventions:
 *   - Every function returns LATGAL_OK (0) on success or a latgal_status
 *     error code. Output parameters are written only on success.
 *   - Objects are opaque handles created by *_load_* functions and released
 *     with the matching *_free function. Handles are immutable after
 *     creation and may be shared across threads for reads.
 *   - Strings returned through char** out-parameters are NUL-terminated,
 *     heap-allocated, and must be released with latgal_string_free.
 *   - After a failure, latgal_last_error_message / latgal_last_error_json
 *     describe the error; the buffers are thread-local and remain valid
 *     until the next failing call on the same thread.
 *   - Passing 0 for a max_elements / max_concepts argument selects the
 *     built-in defaults (10^6 table cells, 10^5 concepts).
 */

#ifndef LATGAL_LATGAL_H
#define LATGAL_LATGAL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LATGAL_BUILD_SHARED)
#    define LATGAL_API __declspec(dllexport)
#  else
#    define LATGAL_API __declspec(dllimport)
#  endif
#else
#  define LATGAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latgal_status {
  LATGAL_OK = 0,
  LATGAL_E_IO = 1,
  LATGAL_E_PARSE = 2,
  LATGAL_E_CYCLE = 3,
  LATGAL_E_NOT_A_LATTICE = 4,
  LATGAL_E_NO_BOUNDS = 5,
  LATGAL_E_SIZE_LIMIT = 6,
  LATGAL_E_UNKNOWN_LABEL = 7,
  LATGAL_E_NOT_CLOSED = 8,
  LATGAL_E_MISSING_BOUND = 9,
  LATGAL_E_NOT_CLOSURE_OPERATOR = 10,
  LATGAL_E_NOT_INTERIOR_OPERATOR = 11,
  LATGAL_E_NOT_SUP_PRESERVING = 12,
  LATGAL_E_NOT_INF_PRESERVING = 13,
  LATGAL_E_DOMAIN_MISMATCH = 14,
  LATGAL_E_NOT_ISO = 15,
  LATGAL_E_BOUNDARY_VIOLATION = 16,
  LATGAL_E_HOST_MISMATCH = 17,
  LATGAL_E_ARITY_MISMATCH = 18,
  LATGAL_E_NOT_SUBLATTICE = 19,
  LATGAL_E_NOT_DISTRIBUTIVE = 20,
  LATGAL_E_NOT_SUBDIRECT = 21,
  LATGAL_E_NOT_COMPLETE = 22,
  LATGAL_E_MISSING_CELL = 23,
  LATGAL_E_UNMAPPED_TOKEN = 24,
  LATGAL_E_NOT_BINARY = 25,
  LATGAL_E_INVALID_ARGUMENT = 26,
  LATGAL_E_INTERNAL = 99
} latgal_status;

/* 1 for unreadable or malformed input files (IO/parse class), 0 for inputs
 * that parse but fail a mathematical validation. */
LATGAL_API int latgal_status_is_input_error(latgal_status status);

LATGAL_API const char* latgal_status_name(latgal_status status);
LATGAL_API const char* latgal_version(void);

/* Thread-local description of the most recent failure on this thread. */
LATGAL_API const char* latgal_last_error_message(void);
/* Same, as one JSON object: {"error":{"kind":"...","message":"..."}} */
LATGAL_API const char* latgal_last_error_json(void);

LATGAL_API void latgal_string_free(char* text);

/* ---- lattices ---------------------------------------------------------- */

typedef struct latgal_lattice latgal_lattice;

LATGAL_API latgal_status latgal_lattice_load_file(const char* path,
                                                  latgal_lattice** out);
LATGAL_API latgal_status latgal_lattice_load_json(const char* json,
                                                  latgal_lattice** out);
LATGAL_API void latgal_lattice_free(latgal_lattice* lattice);

LATGAL_API latgal_status latgal_lattice_size(const latgal_lattice* lattice,
                                             size_t* out);
LATGAL_API latgal_status latgal_lattice_element(const latgal_lattice* lattice,
                                                size_t index, char** out_label);
LATGAL_API latgal_status latgal_lattice_bottom(const latgal_lattice* lattice,
                                               char** out_label);
LATGAL_API latgal_status latgal_lattice_top(const latgal_lattice* lattice,
                                            char** out_label);
LATGAL_API latgal_status latgal_lattice_leq(const latgal_lattice* lattice,
                                            const char* x, const char* y,
                                            int* out);
LATGAL_API latgal_status latgal_lattice_join(const latgal_lattice* lattice,
                                             const char* x, const char* y,
                                             char** out_label);
LATGAL_API latgal_status latgal_lattice_meet(const latgal_lattice* lattice,
                                             const char* x, const char* y,
                                             char** out_label);

LATGAL_API latgal_status latgal_lattice_to_json(const latgal_lattice* lattice,
                                                char** out);
LATGAL_API latgal_status latgal_lattice_dot(const latgal_lattice* lattice,
                                            char** out);
/* Join/meet tables; ansi != 0 adds bold headers. */
LATGAL_API latgal_status latgal_lattice_tables_text(const latgal_lattice* lattice,
                                                    int ansi, char** out);
LATGAL_API latgal_status latgal_lattice_tables_json(const latgal_lattice* lattice,
                                                    char** out);

/* ---- aggregations ------------------------------------------------------ */

typedef struct latgal_aggregation latgal_aggregation;

/* Loads a spec file, loads the lattice it references (relative to the spec
 * file), validates every slot and the boundary condition. */
LATGAL_API latgal_status latgal_agg_load_file(const char* path,
                                              latgal_aggregation** out);
LATGAL_API void latgal_agg_free(latgal_aggregation* aggregation);

LATGAL_API latgal_status latgal_agg_arity(const latgal_aggregation* aggregation,
                                          size_t* out);
/* One JSON line per build: lattice size, arity, component maps. */
LATGAL_API latgal_status latgal_agg_describe_json(const latgal_aggregation* aggregation,
                                                  char** out);
LATGAL_API latgal_status latgal_agg_eval(const latgal_aggregation* aggregation,
                                         const char* const* labels, size_t count,
                                         char** out_label);
LATGAL_API latgal_status latgal_agg_table_csv(const latgal_aggregation* aggregation,
                                              size_t max_elements, char** out);
LATGAL_API latgal_status latgal_agg_table_text(const latgal_aggregation* aggregation,
                                               size_t max_elements, int ansi,
                                               char** out);
/* Unary components f_i(x) = f(0,..,x,..,0) as a JSON array of label maps. */
LATGAL_API latgal_status latgal_agg_decompose_json(const latgal_aggregation* aggregation,
                                                   size_t max_elements, char** out);
/* Two-chain factor matrices through the join-irreducible embedding of the
 * host; requires a distributive host lattice. */
LATGAL_API latgal_status latgal_agg_subdirect_json(const latgal_aggregation* aggregation,
                                                   char** out);

/* ---- many-valued contexts and concept analysis ------------------------- */

typedef struct latgal_context latgal_context;
typedef struct latgal_family latgal_family;

LATGAL_API latgal_status latgal_context_load_file(const char* path,
                                                  latgal_context** out);
LATGAL_API void latgal_context_free(latgal_context* context);

LATGAL_API latgal_status latgal_family_load_file(const char* path,
                                                 latgal_family** out);
LATGAL_API void latgal_family_free(latgal_family* family);

LATGAL_API latgal_status latgal_fca_concepts_json(const latgal_context* context,
                                                  const latgal_family* family,
                                                  size_t max_concepts, char** out);
LATGAL_API latgal_status latgal_fca_lattice_dot(const latgal_context* context,
                                                const latgal_family* family,
                                                size_t max_concepts, char** out);
/* Classical antitone concepts of a 0/1 context. */
LATGAL_API latgal_status latgal_fca_crisp_json(const latgal_context* context,
                                               char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATGAL_LATGAL_H */
