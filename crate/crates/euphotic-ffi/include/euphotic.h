#ifndef EUPHOTIC_H
#define EUPHOTIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirrored in the C header.
 */
typedef enum EuStatus {
  EuStatus_Ok = 0,
  EuStatus_InputError = 1,
  EuStatus_CapabilityError = 2,
  EuStatus_InvariantViolation = 3,
  EuStatus_NullPointer = 4,
  EuStatus_Utf8Error = 5,
  EuStatus_CheckFailed = 6,
} EuStatus;

/**
 * Opaque root-system handle.
 */
typedef struct EuRootSystem EuRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a root system. `type_tag` is one of `A,B,C,D,E6,E7,E8,F4,G2`;
 * `rank` is ignored for the fixed-rank exceptional types when 0.
 *
 * # Safety
 * `type_tag` must be a valid NUL-terminated string and `out` non-null.
 */
enum EuStatus eu_root_system_new(const char *type_tag, uintptr_t rank, struct EuRootSystem **out);

/**
 * Releases a root-system handle. Null is a no-op.
 *
 * # Safety
 * `handle` must come from `eu_root_system_new` and not be freed twice.
 */
void eu_root_system_free(struct EuRootSystem *handle);

/**
 * Number of roots.
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
enum EuStatus eu_num_roots(const struct EuRootSystem *handle, uintptr_t *out);

/**
 * Rank of the system.
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
enum EuStatus eu_rank(const struct EuRootSystem *handle, uintptr_t *out);

/**
 * Facet report (m, barycenter, graded dimensions) as a JSON string.
 *
 * # Safety
 * `j` must point to `j_len` readable indices; `out_json` receives a
 * string to free with `eu_string_free`.
 */
enum EuStatus eu_facet_report_json(const struct EuRootSystem *handle,
                                   const uintptr_t *j,
                                   uintptr_t j_len,
                                   char **out_json);

/**
 * Graded dimensions of a facet. `dims` must have room for `m` entries;
 * call with `dims_cap = 0` to query `m` through `out_m` first.
 *
 * # Safety
 * Pointer arguments must be valid for the advertised lengths.
 */
enum EuStatus eu_grading_dims(const struct EuRootSystem *handle,
                              const uintptr_t *j,
                              uintptr_t j_len,
                              uintptr_t *dims,
                              uintptr_t dims_cap,
                              uintptr_t *out_m);

/**
 * Orbit membership of `y` in the extended-affine-Weyl orbit of `x`,
 * both given as comma-separated value coordinates (`p/q` entries).
 * `lattice` is 0 for simply connected, 1 for adjoint. On success
 * `out_member` is 1 or 0 and, when a witness exists, `out_witness_json`
 * (optional) receives it.
 *
 * # Safety
 * String pointers must be valid NUL-terminated strings.
 */
enum EuStatus eu_orbit_contains(const struct EuRootSystem *handle,
                                const char *x,
                                const char *y,
                                int32_t lattice,
                                int32_t *out_member,
                                char **out_witness_json);

/**
 * Character genericity. `kind` is 0 for the type A condition, 1 for
 * types B/C/D. `exps` has `n` entries.
 *
 * # Safety
 * `exps` must point to `n` readable values; `out_generic` must be valid.
 */
enum EuStatus eu_char_generic(int32_t kind,
                              uintptr_t n,
                              uint64_t q,
                              const int64_t *exps,
                              int32_t *out_generic);

/**
 * Census of generic tuples; `kind` as in `eu_char_generic`.
 *
 * # Safety
 * `out_count` must be a valid pointer.
 */
enum EuStatus eu_char_census(int32_t kind, uintptr_t n, uint64_t q, uint64_t *out_count);

/**
 * Runs the rigidity audit over a scenario JSON string; the report comes
 * back as JSON. Returns `CheckFailed` when the audit ran but a check
 * did not pass.
 *
 * # Safety
 * `scenario_json` must be a valid NUL-terminated string.
 */
enum EuStatus eu_audit_scenario_json(const char *scenario_json, char **out_json);

/**
 * Releases a string produced by this library. Null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void eu_string_free(char *s);

/**
 * Library version as a static string; do not free.
 */
const char *eu_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EUPHOTIC_H */
