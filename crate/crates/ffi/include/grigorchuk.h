#ifndef GRIGORCHUK_H
#define GRIGORCHUK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GrgStatus {
  GRG_STATUS_OK = 0,
  GRG_STATUS_NULL_POINTER = 1,
  GRG_STATUS_INVALID_UTF8 = 2,
  GRG_STATUS_INVALID_OMEGA = 3,
  GRG_STATUS_INVALID_WORD = 4,
  GRG_STATUS_INVALID_RAY = 5,
  GRG_STATUS_INVALID_VERTEX = 6,
  GRG_STATUS_OMEGA_MISMATCH = 7,
  GRG_STATUS_NOT_REPETITION_FREE = 8,
  GRG_STATUS_UNSUPPORTED = 9,
  GRG_STATUS_PANIC = 10,
} GrgStatus;

typedef enum GrgFormat {
  GRG_FORMAT_DOT = 0,
  GRG_FORMAT_JSONL = 1,
} GrgFormat;

typedef enum GrgTarget {
  GRG_TARGET_GAMMA_PLUS = 0,
  GRG_TARGET_GAMMA_PLUS_TILDE = 1,
} GrgTarget;

// An element of `G_ω`, stored as a reduced word.
typedef struct GrgElement GrgElement;

// A defining sequence ω.
typedef struct GrgOmega GrgOmega;

// A vertex of the cube complex.
typedef struct GrgVertex GrgVertex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call on the same thread; do not free.
const char *grg_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void grg_string_free(char *s);

// Parses `pre:period`, e.g. `":012"`.
//
// # Safety
// `text` must be a nul-terminated string, `out` a valid pointer.
enum GrgStatus grg_omega_parse(const char *text, struct GrgOmega **out);

// # Safety
// `omega` must be NULL or a handle from [`grg_omega_parse`], not yet freed.
void grg_omega_free(struct GrgOmega *omega);

// # Safety
// Pointers must be valid.
enum GrgStatus grg_omega_is_repetition_free(const struct GrgOmega *omega, bool *out);

// Normal form `pre:period`.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_omega_to_string(const struct GrgOmega *omega, char **out);

// Parses a word over `{a, b, c, d}` (`""` or `"1"` for the identity) as an element of `G_ω`.
//
// # Safety
// Pointers must be valid, `word` nul-terminated.
enum GrgStatus grg_element_parse(const struct GrgOmega *omega,
                                 const char *word,
                                 struct GrgElement **out);

// # Safety
// `element` must be NULL or a live element handle.
void grg_element_free(struct GrgElement *element);

// Reduced word of the element.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_element_word(const struct GrgElement *element, char **out);

// Product `g·h` (apply `h` first).
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_element_mul(const struct GrgElement *g,
                               const struct GrgElement *h,
                               struct GrgElement **out);

// Whether the element is the identity of `G_ω`.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_element_is_trivial(const struct GrgElement *element, bool *out);

// Whether two elements of the same `G_ω` are equal.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_element_equal(const struct GrgElement *g, const struct GrgElement *h, bool *out);

// Image of a ray of the orbit of `0^∞`, written as its digits (`"0inf"` for `0^∞`).
//
// # Safety
// Pointers must be valid, `ray` nul-terminated.
enum GrgStatus grg_element_apply(const struct GrgElement *element, const char *ray, char **out);

// Parses a vertex: `"∅"` or `"v0"` for the base vertex, otherwise the
// comma-separated rays where it differs from the base vertex.
//
// # Safety
// Pointers must be valid, `text` nul-terminated.
enum GrgStatus grg_vertex_parse(const char *text, struct GrgVertex **out);

// # Safety
// `vertex` must be NULL or a live vertex handle.
void grg_vertex_free(struct GrgVertex *vertex);

// # Safety
// Pointers must be valid.
enum GrgStatus grg_vertex_to_string(const struct GrgVertex *vertex, char **out);

// The vertex `g·v`.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_vertex_act(const struct GrgVertex *vertex,
                              const struct GrgElement *element,
                              struct GrgVertex **out);

// Combinatorial distance, the number of rays where the colourings differ.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_vertex_distance(const struct GrgVertex *v,
                                   const struct GrgVertex *w,
                                   size_t *out);

// The ball of radius `radius` around `0^∞` in the Schreier graph, as DOT or JSON lines.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_schreier_export(const struct GrgOmega *omega,
                                   size_t radius,
                                   enum GrgFormat format,
                                   char **out);

// Stabilizer of `Γ₊` or `Γ̃₊` among elements of length at most `max_len`:
// its size and recognised type (`"D8"`, `"Z2xZ2"`, ...). `type_out` may be NULL.
// Fails with `NOT_REPETITION_FREE` if ω has a repetition.
//
// # Safety
// Pointers must be valid.
enum GrgStatus grg_stabilizer(const struct GrgOmega *omega,
                              enum GrgTarget target,
                              size_t max_len,
                              size_t *order_out,
                              char **type_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRIGORCHUK_H */
