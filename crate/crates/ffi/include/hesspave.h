#ifndef HESSPAVE_H
#define HESSPAVE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum HpStatus {
  HP_STATUS_OK = 0,
  /**
   * λ, h or their sizes are invalid.
   */
  HP_STATUS_INVALID_INPUT = 1,
  /**
   * A required pointer was null.
   */
  HP_STATUS_NULL_POINTER = 2,
  /**
   * An index is out of range.
   */
  HP_STATUS_OUT_OF_RANGE = 3,
  /**
   * The output buffer is too small.
   */
  HP_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * The variety is empty.
   */
  HP_STATUS_EMPTY = 5,
  /**
   * `q` is not one of 2, 3, 5, 7, 11, 13.
   */
  HP_STATUS_INVALID_FIELD = 6,
  /**
   * The brute-force search exceeds the work budget.
   */
  HP_STATUS_BUDGET_EXCEEDED = 7,
  /**
   * The brute-force count disagrees with the paving.
   */
  HP_STATUS_MISMATCH = 8,
  /**
   * Internal error; the library caught a panic.
   */
  HP_STATUS_INTERNAL = 9,
} HpStatus;

/**
 * Cell table for one `(λ, h)`; create with [`hp_cells_new`], release with [`hp_cells_free`].
 */
typedef struct HpCellTable HpCellTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Enumerates the cells of `Hess(X_λ, h)` into a new table written to `*out`.
 *
 * # Safety
 * `lambda` must point to `lambda_len` values, `h` to `h_len` values or be
 * null, and `out` must be writable.
 */
enum HpStatus hp_cells_new(const size_t *lambda,
                           size_t lambda_len,
                           const size_t *h,
                           size_t h_len,
                           struct HpCellTable **out);

/**
 * Number of cells; 0 for a null table.
 *
 * # Safety
 * `table` must be null or come from [`hp_cells_new`].
 */
size_t hp_cells_len(const struct HpCellTable *table);

/**
 * `n = |λ|`, the length of every word; 0 for a null table.
 *
 * # Safety
 * `table` must be null or come from [`hp_cells_new`].
 */
size_t hp_cells_n(const struct HpCellTable *table);

/**
 * Dimension of cell `index`.
 *
 * # Safety
 * `table` must come from [`hp_cells_new`] and `dim` must be writable.
 */
enum HpStatus hp_cells_dim(const struct HpCellTable *table, size_t index, size_t *dim);

/**
 * Writes the one-line notation of cell `index`'s permutation `w` into `buf`,
 * which must hold at least [`hp_cells_n`] values.
 *
 * # Safety
 * `table` must come from [`hp_cells_new`]; `buf` must point to `buf_len` writable values.
 */
enum HpStatus hp_cells_word(const struct HpCellTable *table,
                            size_t index,
                            size_t *buf,
                            size_t buf_len);

/**
 * Cell counts by dimension. `*len` receives the number of coefficients; if it
 * exceeds `cap` nothing else is written and `BufferTooSmall` is returned.
 * An empty variety has zero coefficients.
 *
 * # Safety
 * `table` must come from [`hp_cells_new`]; `coeffs` must point to `cap`
 * writable values (or be null with `cap == 0`); `len` must be writable.
 */
enum HpStatus hp_poincare(const struct HpCellTable *table,
                          uint64_t *coeffs,
                          size_t cap,
                          size_t *len);

/**
 * Releases a table. Null is ignored.
 *
 * # Safety
 * `table` must be null or come from [`hp_cells_new`] and not be used afterwards.
 */
void hp_cells_free(struct HpCellTable *table);

/**
 * Writes the permutation of the zero-dimensional cell into `buf` (length at
 * least `|λ|`). Returns `Empty` when the variety is empty.
 *
 * # Safety
 * Array arguments as for [`hp_cells_new`]; `buf` must point to `buf_len` writable values.
 */
enum HpStatus hp_r0_word(const size_t *lambda,
                         size_t lambda_len,
                         const size_t *h,
                         size_t h_len,
                         size_t *buf,
                         size_t buf_len);

/**
 * Brute-force `|Hess(X_λ, h)(F_q)|` into `*total` and the paving's prediction
 * into `*predicted`. Returns `Mismatch` when they differ.
 *
 * # Safety
 * Array arguments as for [`hp_cells_new`]; `total` and `predicted` must be writable.
 */
enum HpStatus hp_point_count(const size_t *lambda,
                             size_t lambda_len,
                             const size_t *h,
                             size_t h_len,
                             uint32_t q,
                             uint32_t budget_bits,
                             uint64_t *total,
                             uint64_t *predicted);

/**
 * Message for the last failure on this thread; empty after a success. The
 * pointer stays valid until the next call on this thread.
 */
const char *hp_last_error(void);

/**
 * Library version as a static string.
 */
const char *hp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HESSPAVE_H */
