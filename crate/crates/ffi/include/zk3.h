#ifndef ZK3_H
#define ZK3_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Zk3Status {
  ZK3_STATUS_OK = 0,
  ZK3_STATUS_NULL_POINTER = 1,
  ZK3_STATUS_INVALID_UTF8 = 2,
  ZK3_STATUS_INVALID_ARGUMENT = 3,
  ZK3_STATUS_SINGULAR = 4,
  ZK3_STATUS_PRIME_DIVIDES_DISCRIMINANT = 5,
  ZK3_STATUS_INADMISSIBLE_PRIME = 6,
  ZK3_STATUS_UNKNOWN_CLAIM = 7,
  ZK3_STATUS_INTERNAL = 8,
  ZK3_STATUS_PANIC = 9,
} Zk3Status;

typedef enum Zk3Case {
  ZK3_CASE_J0 = 0,
  ZK3_CASE_J1728 = 1,
} Zk3Case;

typedef enum Zk3Format {
  ZK3_FORMAT_JSON = 0,
  ZK3_FORMAT_MARKDOWN = 1,
  ZK3_FORMAT_TSV = 2,
} Zk3Format;

// Opaque lattice handle.
typedef struct Zk3Lattice Zk3Lattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a lattice from a row-major `rank × rank` Gram matrix.
//
// # Safety
// `entries` must point to `rank * rank` values; `out` must be writable.
enum Zk3Status zk3_lattice_from_gram(const int64_t *entries, size_t rank, struct Zk3Lattice **out);

// Parses `{"label": ..., "rank": ..., "gram": [[...]]}`.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum Zk3Status zk3_lattice_from_json(const char *json, struct Zk3Lattice **out);

// # Safety
// `lattice` must come from this library and not be freed twice.
void zk3_lattice_free(struct Zk3Lattice *lattice);

// # Safety
// Pointers must be valid.
enum Zk3Status zk3_lattice_rank(const struct Zk3Lattice *lattice, size_t *out);

// Discriminant as a decimal string.
//
// # Safety
// Pointers must be valid; free the result with `zk3_string_free`.
enum Zk3Status zk3_lattice_discriminant(const struct Zk3Lattice *lattice, char **out);

// Discriminant group as text, e.g. `Z/2 + Z/14` (`0` when trivial).
//
// # Safety
// Pointers must be valid; free the result with `zk3_string_free`.
enum Zk3Status zk3_lattice_discriminant_group(const struct Zk3Lattice *lattice, char **out);

// `⌊(22 − n)/2⌋`; fails with `PrimeDividesDiscriminant` when `p | disc`.
//
// # Safety
// Pointers must be valid.
enum Zk3Status zk3_lattice_artin_bound(const struct Zk3Lattice *lattice, uint64_t p, uint32_t *out);

// Bound on the Artin invariant allowing `p | disc`.
//
// # Safety
// `out` must be writable.
enum Zk3Status zk3_artin_bound_adjusted(size_t rank, int64_t disc, uint64_t p, uint32_t *out);

// Product of two order elements written as `a,b,c,d` (rationals allowed).
//
// # Safety
// Strings must be nul-terminated; free the result with `zk3_string_free`.
enum Zk3Status zk3_quat_mul(enum Zk3Case case_,
                            uint64_t p,
                            const char *x,
                            const char *y,
                            char **out);

// Runs the claim registry. `filter` may be null (all claims); `primes` may
// be null when `n_primes` is 0 (default primes). `any_failed_out` receives 1
// if some claim failed.
//
// # Safety
// Pointers must be valid; free the report with `zk3_string_free`.
enum Zk3Status zk3_repro_run(const char *filter,
                             const uint64_t *primes,
                             size_t n_primes,
                             enum Zk3Format format,
                             char **out,
                             int32_t *any_failed_out);

// # Safety
// `s` must come from this library and not be freed twice.
void zk3_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into the library on this thread.
const char *zk3_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZK3_H */
