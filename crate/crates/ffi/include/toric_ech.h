#ifndef TORIC_ECH_H
#define TORIC_ECH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible entry point.
 */
typedef enum TeStatus {
  TE_STATUS_OK = 0,
  TE_STATUS_NULL_POINTER = 1,
  TE_STATUS_INVALID_UTF8 = 2,
  TE_STATUS_PARSE_ERROR = 3,
  TE_STATUS_INVALID_DATA = 4,
  TE_STATUS_INCONSISTENT = 5,
  TE_STATUS_PANIC = 6,
} TeStatus;

/**
 * Opaque convex toric domain.
 */
typedef struct TeDomain TeDomain;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *te_version(void);

/**
 * Message of the last failure on this thread; empty after a success. Valid
 * until the next call into the library from the same thread.
 */
const char *te_last_error(void);

/**
 * Parses a domain such as `{"type":"ellipsoid","a":"1","b":"2"}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TeStatus te_domain_from_json(const char *json, struct TeDomain **out);

/**
 * Releases a domain. Null is ignored.
 *
 * # Safety
 * `domain` must come from `te_domain_from_json` and not be used afterwards.
 */
void te_domain_free(struct TeDomain *domain);

/**
 * Canonical JSON form of a domain.
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_domain_to_json(const struct TeDomain *domain, char **out);

/**
 * `c_k` as a rational string such as `"3/2"`.
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_capacity(const struct TeDomain *domain, uint64_t k, char **out);

/**
 * `{"domain":..,"capacities":["0",..]}` for `c_0 .. c_K`.
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_capacities(const struct TeDomain *domain, uint64_t k_max, char **out);

/**
 * Orbit families with action at most `action` (a rational string).
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_orbits(const struct TeDomain *domain, const char *action, char **out);

/**
 * Embedding obstruction search for `k ≤ k_max`; `obstructed_at` is null
 * when no capacity is violated.
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_check_embed(const struct TeDomain *inner,
                             const struct TeDomain *outer,
                             uint64_t k_max,
                             char **out);

/**
 * Noncontractibility certificate report.
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_certify_loop(const struct TeDomain *inner,
                              const struct TeDomain *outer,
                              char **out);

/**
 * Certificate for `E(a,b) ⊂ E(c,d)` from four rational strings.
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_ellipsoid_certificate(const char *a,
                                       const char *b,
                                       const char *c,
                                       const char *d,
                                       char **out);

/**
 * Breaking analysis report; nested domains required.
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_breaking(const struct TeDomain *inner, const struct TeDomain *outer, char **out);

/**
 * Runs the curve checks of a JSON configuration (`"{}"` for the default
 * uniqueness check).
 *
 * # Safety
 * Pointers must be valid; see the module documentation.
 */
enum TeStatus te_curve_check(const char *config, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void te_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_ECH_H */
