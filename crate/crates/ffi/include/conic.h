#ifndef CONIC_H
#define CONIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ConicStatus {
  CONIC_STATUS_OK = 0,
  CONIC_STATUS_NOT_CONIC = 1,
  CONIC_STATUS_INCONCLUSIVE = 2,
  CONIC_STATUS_INVALID_CERTIFICATE = 3,
  CONIC_STATUS_NULL_POINTER = 10,
  CONIC_STATUS_INVALID_UTF8 = 11,
  CONIC_STATUS_PARSE_ERROR = 12,
  CONIC_STATUS_SCHEMA_ERROR = 13,
  CONIC_STATUS_GEOMETRY_ERROR = 14,
  CONIC_STATUS_BUFFER_TOO_SMALL = 15,
  CONIC_STATUS_OTHER_ERROR = 20,
  CONIC_STATUS_PANIC = 99,
} ConicStatus;

typedef enum ConicConstraint {
  CONIC_CONSTRAINT_ANY = 0,
  CONIC_CONSTRAINT_SIMPLEX = 1,
  CONIC_CONSTRAINT_CUBE = 2,
  CONIC_CONSTRAINT_SIMPLE = 3,
} ConicConstraint;

/**
 * Opaque polytope handle.
 */
typedef struct ConicPolytope ConicPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next library call on this thread.
 */
const char *conic_last_error(void);

/**
 * Parses a polytope document and builds its face lattice.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ConicStatus conic_polytope_from_json(const char *json, struct ConicPolytope **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `p` must come from [`conic_polytope_from_json`] and not be used afterwards.
 */
void conic_polytope_free(struct ConicPolytope *p);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t conic_polytope_num_vertices(const struct ConicPolytope *p);

/**
 * Copies `(f_0, …, f_n)` into `buf`. `*len` receives the length even when
 * the buffer is too small.
 *
 * # Safety
 * `p` must be a live handle, `buf` must hold `cap` entries, `len` must be valid.
 */
enum ConicStatus conic_polytope_f_vector(const struct ConicPolytope *p,
                                         uint64_t *buf,
                                         size_t cap,
                                         size_t *len);

/**
 * Copies `(h_0, …, h_n)` into `buf`, as [`conic_polytope_f_vector`].
 *
 * # Safety
 * As for [`conic_polytope_f_vector`].
 */
enum ConicStatus conic_polytope_h_vector(const struct ConicPolytope *p,
                                         int64_t *buf,
                                         size_t cap,
                                         size_t *len);

/**
 * Searches for a conic sequence. `budget` 0 means unlimited. When a sequence
 * is found and `certificate_json` is not NULL, it receives a certificate
 * document to be freed with [`conic_string_free`].
 *
 * Returns `Ok`, `NotConic` or `Inconclusive`.
 *
 * # Safety
 * `p` must be a live handle; `certificate_json` must be NULL or valid.
 */
enum ConicStatus conic_search(const struct ConicPolytope *p,
                              enum ConicConstraint constraint,
                              uint64_t budget,
                              char **certificate_json);

/**
 * Replays a certificate document. Returns `Ok` when it is valid and
 * `InvalidCertificate` with a diagnostic otherwise.
 *
 * # Safety
 * `p` must be a live handle and `certificate_json` a NUL-terminated string.
 */
enum ConicStatus conic_verify(const struct ConicPolytope *p,
                              const char *certificate_json,
                              enum ConicConstraint constraint);

/**
 * Full analysis report as JSON, to be freed with [`conic_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `report_json` a valid pointer.
 */
enum ConicStatus conic_analyze(const struct ConicPolytope *p, char **report_json);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void conic_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONIC_H */
