#ifndef BINOMAP_H
#define BINOMAP_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum BinomapStatus {
  BINOMAP_STATUS_OK = 0,
  BINOMAP_STATUS_NULL_POINTER = 1,
  BINOMAP_STATUS_INVALID_UTF8 = 2,
  BINOMAP_STATUS_PARSE_ERROR = 3,
  BINOMAP_STATUS_NOT_BINOMIAL = 4,
  BINOMAP_STATUS_BRANCH_LIMIT = 5,
  BINOMAP_STATUS_OUT_OF_RANGE = 6,
  BINOMAP_STATUS_INVALID_ARGUMENT = 7,
  BINOMAP_STATUS_INTERNAL = 8,
  BINOMAP_STATUS_PANIC = 9,
} BinomapStatus;

// The monomial maps of a system.
typedef struct BinomapDecomposition BinomapDecomposition;

// A parsed polynomial system.
typedef struct BinomapSystem BinomapSystem;

// Tuning knobs for [`binomap_decompose`]; start from
// [`binomap_options_default`].
typedef struct BinomapOptions {
  // Only selections of the pure dimension.
  bool pure_dim;
  // Largest selection size; negative means unbounded.
  int64_t max_size;
  double tolerance;
  size_t samples;
  uint64_t seed;
  size_t branch_limit;
} BinomapOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next library call on the same thread.
const char *binomap_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *binomap_version(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void binomap_string_free(char *s);

struct BinomapOptions binomap_options_default(void);

// Parses a system from NUL-terminated text.
//
// # Safety
// `text` must be a valid C string; `out` must be writable.
enum BinomapStatus binomap_system_parse(const char *text, struct BinomapSystem **out);

// The adjacent 2x2 minors of an `m x n` matrix of unknowns.
//
// # Safety
// `out` must be writable.
enum BinomapStatus binomap_system_adjacent_minors(size_t m, size_t n, struct BinomapSystem **out);

// # Safety
// `sys` must be null or a live handle from this library.
void binomap_system_free(struct BinomapSystem *sys);

// # Safety
// `sys` must be null or a live handle. Returns 0 for null.
size_t binomap_system_num_vars(const struct BinomapSystem *sys);

// # Safety
// `sys` must be null or a live handle. Returns 0 for null.
size_t binomap_system_num_equations(const struct BinomapSystem *sys);

// Name of variable `index`; free the result with [`binomap_string_free`].
//
// # Safety
// `sys` must be a live handle; `out` must be writable.
enum BinomapStatus binomap_system_var_name(const struct BinomapSystem *sys,
                                           size_t index,
                                           char **out);

// Text form accepted by [`binomap_system_parse`].
//
// # Safety
// `sys` must be a live handle; `out` must be writable.
enum BinomapStatus binomap_system_serialize(const struct BinomapSystem *sys, char **out);

// Decomposes `sys`. A null `opts` means [`binomap_options_default`].
//
// # Safety
// `sys` must be a live handle, `opts` null or valid, `out` writable.
enum BinomapStatus binomap_decompose(const struct BinomapSystem *sys,
                                     const struct BinomapOptions *opts,
                                     struct BinomapDecomposition **out);

// # Safety
// `d` must be null or a live handle from this library.
void binomap_decomposition_free(struct BinomapDecomposition *d);

// Number of maps; 0 for null.
//
// # Safety
// `d` must be null or a live handle.
size_t binomap_decomposition_count(const struct BinomapDecomposition *d);

// Number of variables each map assigns; 0 for null.
//
// # Safety
// `d` must be null or a live handle.
size_t binomap_decomposition_num_vars(const struct BinomapDecomposition *d);

// Number of parameters of map `map`.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum BinomapStatus binomap_map_dim(const struct BinomapDecomposition *d, size_t map, size_t *out);

// Whether variable `var` is identically zero on map `map`.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum BinomapStatus binomap_map_is_zero(const struct BinomapDecomposition *d,
                                       size_t map,
                                       size_t var,
                                       bool *out);

// Complex coefficient of variable `var` on map `map`.
//
// # Safety
// `d` must be a live handle; `re` and `im` must be writable.
enum BinomapStatus binomap_map_coeff(const struct BinomapDecomposition *d,
                                     size_t map,
                                     size_t var,
                                     double *re,
                                     double *im);

// Exponent of parameter `param` in variable `var` on map `map`.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum BinomapStatus binomap_map_exponent(const struct BinomapDecomposition *d,
                                        size_t map,
                                        size_t param,
                                        size_t var,
                                        int64_t *out);

// JSON document describing every map; free with [`binomap_string_free`].
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum BinomapStatus binomap_decomposition_to_json(const struct BinomapDecomposition *d, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BINOMAP_H */
