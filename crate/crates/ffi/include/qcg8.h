#ifndef QCG8_H
#define QCG8_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every FFI call.
typedef enum QcgStatus {
  QCG_STATUS_OK = 0,
  QCG_STATUS_NULL_ARGUMENT = 1,
  QCG_STATUS_UNSUPPORTED_COLUMN_WEIGHT = 2,
  QCG_STATUS_ROW_WEIGHT_TOO_SMALL = 3,
  QCG_STATUS_ROW_WEIGHT_TOO_LARGE = 4,
  QCG_STATUS_CIRCULANT_TOO_SMALL = 5,
  QCG_STATUS_INDEX_OUT_OF_RANGE = 6,
  QCG_STATUS_INVALID_ARGUMENT = 7,
  QCG_STATUS_IO_ERROR = 8,
  QCG_STATUS_INTERNAL_ERROR = 9,
} QcgStatus;

// A selected construction: the mirror sequence and its exponent matrix.
typedef struct QcgConstruction QcgConstruction;

// An expanded binary parity-check matrix.
typedef struct QcgPcm QcgPcm;

// Circulant-size landmarks for one `(J, L)` pair.
typedef struct QcgBounds {
  uint64_t search_floor;
  uint64_t special_p;
  uint64_t ccs_class_bound;
  uint64_t global_lower_bound;
  uint64_t min_p_upper_bound;
} QcgBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Selects the construction for `(j, l)` and materializes its exponent
// matrix. On success `*out` owns the new handle.
//
// # Safety
// `out` must be a valid pointer to writable memory.
enum QcgStatus qcg_construct(uint32_t j, uint64_t l, struct QcgConstruction **out);

// Releases a construction handle. Null is ignored.
//
// # Safety
// `handle` must have come from [`qcg_construct`] and not been freed before.
void qcg_construction_free(struct QcgConstruction *handle);

// Writes the column and row weights of the construction.
//
// # Safety
// All pointers must be valid; `handle` must be a live construction handle.
enum QcgStatus qcg_construction_dims(const struct QcgConstruction *handle,
                                     uint32_t *j,
                                     uint64_t *l);

// Writes one exponent-matrix entry.
//
// # Safety
// All pointers must be valid; `handle` must be a live construction handle.
enum QcgStatus qcg_construction_entry(const struct QcgConstruction *handle,
                                      uint32_t row,
                                      uint64_t col,
                                      int64_t *out);

// Copies the NUL-terminated family label (e.g. `"J7-135"`) into `buf`.
//
// # Safety
// `buf` must point to at least `buf_len` writable bytes.
enum QcgStatus qcg_construction_family(const struct QcgConstruction *handle,
                                       char *buf,
                                       size_t buf_len);

// Decides the girth (4, 6, 8, or 10 meaning "at least 10") of the
// construction at circulant size `p`.
//
// # Safety
// All pointers must be valid; `handle` must be a live construction handle.
enum QcgStatus qcg_girth(const struct QcgConstruction *handle, uint64_t p, uint32_t *out_girth);

// True (1) iff every row-triple of the construction meets the GCD
// constraint; also reports the minimum indicator.
//
// # Safety
// All pointers must be valid; `handle` must be a live construction handle.
enum QcgStatus qcg_gcd_constraint(const struct QcgConstruction *handle,
                                  uint8_t *out_pass,
                                  int64_t *out_min_indicator);

// Evaluates every circulant-size landmark for `(j, l)`.
//
// # Safety
// `out` must be a valid pointer to a `QcgBounds`.
enum QcgStatus qcg_bounds(uint32_t j, uint64_t l, struct QcgBounds *out);

// Finds the smallest circulant size with girth exactly eight for `(j, l)`.
//
// # Safety
// `out_p` must be a valid pointer.
enum QcgStatus qcg_search_min_p(uint32_t j, uint64_t l, uint64_t *out_p);

// Expands the construction into a binary parity-check matrix at circulant
// size `p`. On success `*out` owns the new handle.
//
// # Safety
// All pointers must be valid; `handle` must be a live construction handle.
enum QcgStatus qcg_expand(const struct QcgConstruction *handle, uint64_t p, struct QcgPcm **out);

// Releases a parity-check-matrix handle. Null is ignored.
//
// # Safety
// `handle` must have come from [`qcg_expand`] and not been freed before.
void qcg_pcm_free(struct QcgPcm *handle);

// Writes the expanded dimensions (`rows = J*P`, `cols = L*P`).
//
// # Safety
// All pointers must be valid; `handle` must be a live matrix handle.
enum QcgStatus qcg_pcm_dims(const struct QcgPcm *handle, uint64_t *rows, uint64_t *cols);

// Exact Tanner-graph girth of the expanded matrix by breadth-first search,
// truncated at `cap` (4, 6, 8, or 10).
//
// # Safety
// All pointers must be valid; `handle` must be a live matrix handle.
enum QcgStatus qcg_pcm_graph_girth(const struct QcgPcm *handle, uint32_t cap, uint32_t *out_girth);

// Writes the matrix to `path` in the alist format.
//
// # Safety
// `path` must be a valid NUL-terminated string; `handle` a live matrix
// handle.
enum QcgStatus qcg_pcm_write_alist(const struct QcgPcm *handle, const char *path);

// Static description of a status code.
const char *qcg_status_message(enum QcgStatus status);

// Library version as a static NUL-terminated string.
const char *qcg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCG8_H */
