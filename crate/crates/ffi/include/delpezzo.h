#ifndef DELPEZZO_H
#define DELPEZZO_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Variety codes accepted wherever a `variety` argument appears.
#define DP_VARIETY_F 0

#define DP_VARIETY_PHI 1

// Result codes.
typedef enum DpStatus {
  DP_STATUS_OK = 0,
  DP_STATUS_NULL_POINTER = 1,
  DP_STATUS_INVALID_VARIETY = 2,
  DP_STATUS_INVALID_UTF8 = 3,
  DP_STATUS_PARSE_ERROR = 4,
  DP_STATUS_INVALID_ARGUMENT = 5,
  DP_STATUS_VARIETY_MISMATCH = 6,
  DP_STATUS_OVERFLOW = 7,
  DP_STATUS_BUFFER_TOO_SMALL = 8,
  DP_STATUS_PANIC = 99,
} DpStatus;

// Opaque handle to an element of a Chow ring.
typedef struct DpChowClass DpChowClass;

// Line-bundle flags of `O(a1, a2)`.
typedef struct DpLineBundle {
  bool is_acm;
  bool is_initialized;
  bool is_ulrich;
  int64_t initial_twist;
} DpLineBundle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error message on this thread, or null. The pointer stays valid until
// the next call into this library on the same thread.
const char *dp_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void dp_string_free(char *s);

// Writes `h^0 .. h^n` of `O(a1, a2)` to `out` (`n` = 3 on F, 4 on Phi) and
// the count to `out_len`. `capacity` is the length of `out`.
//
// # Safety
// `out` must point to `capacity` writable values and `out_len` to one.
enum DpStatus dp_cohom(int32_t variety,
                       int64_t a1,
                       int64_t a2,
                       int64_t *out,
                       size_t capacity,
                       size_t *out_len);

// # Safety
// `out` must point to a writable `DpLineBundle`.
enum DpStatus dp_line_bundle(int32_t variety, int64_t a1, int64_t a2, struct DpLineBundle *out);

// Parses a polynomial in `h1, h2, h` (F) or `eta1, eta2, eta` (Phi).
//
// # Safety
// `expr` must be a nul-terminated string and `out` writable.
enum DpStatus dp_chow_parse(int32_t variety, const char *expr, struct DpChowClass **out);

// # Safety
// `a` and `b` must be live handles and `out` writable.
enum DpStatus dp_chow_add(const struct DpChowClass *a,
                          const struct DpChowClass *b,
                          struct DpChowClass **out);

// # Safety
// `a` and `b` must be live handles and `out` writable.
enum DpStatus dp_chow_mul(const struct DpChowClass *a,
                          const struct DpChowClass *b,
                          struct DpChowClass **out);

// Coefficient of the point class.
//
// # Safety
// `c` must be a live handle and `out` writable.
enum DpStatus dp_chow_degree(const struct DpChowClass *c, int64_t *out);

// Normal form as text, e.g. `h1^2 - h2^2`.
//
// # Safety
// `c` must be a live handle and `out` writable.
enum DpStatus dp_chow_to_string(const struct DpChowClass *c, char **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `c` must come from this library and not have been freed.
void dp_chow_free(struct DpChowClass *c);

// Renders a classification table; `name` as accepted by the CLI and
// `format` one of `json`, `csv`, `markdown`.
//
// # Safety
// `name` and `format` must be nul-terminated strings and `out` writable.
enum DpStatus dp_table(const char *name, const char *format, char **out);

// Runs the checks in `scope` (`all`, `cohomology`, `chern`, `classify`).
// `passed` receives the overall verdict; `report`, when not null, the
// JSON report.
//
// # Safety
// `scope` must be a nul-terminated string, `passed` writable, `report`
// null or writable.
enum DpStatus dp_verify(const char *scope, bool *passed, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DELPEZZO_H */
