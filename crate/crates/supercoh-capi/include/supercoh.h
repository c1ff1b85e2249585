#ifndef SUPERCOH_H
#define SUPERCOH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum SupercohStatus {
  /**
   * Success.
   */
  SupercohStatus_Ok = 0,
  /**
   * A pointer argument was null or a parameter was out of range.
   */
  SupercohStatus_InvalidArgument = 1,
  /**
   * The documents parsed but the algebraic laws fail (bad structure
   * constants, non-module matrices, ...).
   */
  SupercohStatus_ValidationFailed = 2,
  /**
   * The input was not valid JSON for the documented schemas.
   */
  SupercohStatus_SchemaError = 3,
} SupercohStatus;

/**
 * An opaque handle owning a validated (algebra, subalgebra, module) triple.
 */
typedef struct SupercohContext SupercohContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Most recent error message for this thread, or null when no error has been
 * recorded. The pointer stays valid until the next failing call on the same
 * thread; do not free it.
 */
const char *supercoh_last_error(void);

/**
 * Creates a context from JSON documents. `algebra_json` is required;
 * `subalgebra_json` may be null (the zero subalgebra) and `module_json` may
 * be null (trivial coefficients). On success writes a handle to `out`.
 *
 * # Safety
 * `algebra_json`, `subalgebra_json`, and `module_json` must each be null or
 * point to NUL-terminated strings valid for reads; `out` must be valid for
 * writes. The returned handle must be released with `supercoh_context_free`.
 */
enum SupercohStatus supercoh_context_new(const char *algebra_json,
                                         const char *subalgebra_json,
                                         const char *module_json,
                                         struct SupercohContext **out);

/**
 * Releases a context created by `supercoh_context_new`. Null is a no-op.
 *
 * # Safety
 * `ctx` must be null or a pointer previously returned by
 * `supercoh_context_new` that has not been freed.
 */
void supercoh_context_free(struct SupercohContext *ctx);

/**
 * Releases a string returned through an out-parameter. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer previously written by this library that has
 * not been freed.
 */
void supercoh_string_free(char *s);

/**
 * dim H^degree(g, a; M) for the context's triple.
 *
 * # Safety
 * `ctx` must be a live context handle; `out_dim` must be valid for writes.
 */
enum SupercohStatus supercoh_cohomology_dim(const struct SupercohContext *ctx,
                                            uint32_t degree,
                                            uint32_t *out_dim);

/**
 * JSON report of per-degree cohomology dimensions up to `max_degree`
 * (inclusive): `{"dims":[...]}`.
 *
 * # Safety
 * `ctx` must be a live context handle; `out_json` must be valid for writes.
 * The returned string must be released with `supercoh_string_free`.
 */
enum SupercohStatus supercoh_cohomology_json(const struct SupercohContext *ctx,
                                             uint32_t max_degree,
                                             char **out_json);

/**
 * JSON report of the truncated cohomology ring with trivial coefficients:
 * `{"dims":[...], "generators":[...]}`.
 *
 * # Safety
 * `ctx` must be a live context handle; `out_json` must be valid for writes.
 * The returned string must be released with `supercoh_string_free`.
 */
enum SupercohStatus supercoh_ring_json(const struct SupercohContext *ctx,
                                       uint32_t max_degree,
                                       char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERCOH_H */
