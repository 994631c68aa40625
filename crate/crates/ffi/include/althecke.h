#ifndef ALTHECKE_H
#define ALTHECKE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum AhStatus {
  AH_STATUS_OK = 0,
  AH_STATUS_NULL_POINTER = 1,
  AH_STATUS_INVALID_INPUT = 2,
  AH_STATUS_INADMISSIBLE = 3,
  AH_STATUS_INDETERMINATE = 4,
  AH_STATUS_OUT_OF_RANGE = 5,
  AH_STATUS_PANIC = 6,
} AhStatus;

// Which normalization of the generators to build.
typedef enum AhForm {
  // Hecke generators with g^2 = (q-1)g + q.
  AH_FORM_G = 0,
  // Involutions f = (2g - (q-1))/(q+1).
  AH_FORM_F = 1,
  // Orthogonal form of the symmetric group.
  AH_FORM_SYM = 2,
} AhForm;

// Normal-form rewriting for words in the even generators.
typedef struct AhEngine AhEngine;

// Seminormal representation of the Hecke algebra.
typedef struct AhRepresentation AhRepresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or null.
// The pointer stays valid until the next call into the library.
const char *ah_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void ah_string_free(char *s);

// Builds the representation for `shape` (e.g. "3,1") at `q` (e.g. "5/7").
//
// # Safety
// `shape` and `q` must be NUL-terminated strings; `out` must be writable.
enum AhStatus ah_representation_new(const char *shape,
                                    const char *q,
                                    enum AhForm form,
                                    struct AhRepresentation **out);

// Number of standard tableaux of the shape, or 0 for null.
//
// # Safety
// `rep` must be null or a live handle.
size_t ah_representation_dim(const struct AhRepresentation *rep);

// Number of strands n, or 0 for null.
//
// # Safety
// `rep` must be null or a live handle.
size_t ah_representation_n(const struct AhRepresentation *rep);

// Writes the matrix of generator `i` (1 <= i < n) row-major into `re` and
// `im`, each of length at least `len` = dim * dim. `im` may be null.
//
// # Safety
// `rep` must be a live handle; `re` (and `im` if non-null) must hold `len` doubles.
enum AhStatus ah_representation_generator(const struct AhRepresentation *rep,
                                          size_t i,
                                          double *re,
                                          double *im,
                                          size_t len);

// # Safety
// `rep` must be null or a handle that has not been freed.
void ah_representation_free(struct AhRepresentation *rep);

// Creates a rewriting engine for n >= 3 strands.
//
// # Safety
// `out` must be writable.
enum AhStatus ah_engine_new(size_t n, struct AhEngine **out);

// Rewrites a word such as "y1 y2 y1" and returns its normal form as a JSON
// array of `{monomial, word, coeff: {num, den}}` objects.
//
// # Safety
// `engine` must be a live handle, `word` a NUL-terminated string, `out` writable.
enum AhStatus ah_engine_rewrite_json(const struct AhEngine *engine, const char *word, char **out);

// # Safety
// `engine` must be null or a handle that has not been freed.
void ah_engine_free(struct AhEngine *engine);

// Runs a command-line invocation (without the program name), e.g.
// `{"classify", "--n", "4"}`. Stdout and stderr are returned as strings and
// the exit code as the result (0 ok, 1 invalid input, 2 failed check,
// 3 indeterminate). Returns -1 if an argument pointer is null.
//
// # Safety
// `argv` must hold `argc` NUL-terminated strings; `out` and `err` must be
// writable or null.
int32_t ah_run(size_t argc, const char *const *argv, char **out, char **err);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALTHECKE_H */
