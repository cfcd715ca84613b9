#ifndef KRPACK_H
#define KRPACK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KrMethod {
  KR_METHOD_GREEDY = 0,
  KR_METHOD_EXACT = 1,
  KR_METHOD_LOCAL = 2,
} KrMethod;

typedef enum KrMode {
  KR_MODE_VERTEX = 0,
  KR_MODE_EDGE = 1,
} KrMode;

typedef enum KrRegime {
  KR_REGIME_LINEAR_TIME = 0,
  KR_REGIME_POLY_VERTEX_CLAW_FREE = 1,
  KR_REGIME_POLY_EDGE_CLAW_FREE = 2,
  KR_REGIME_APX_HARD = 3,
} KrRegime;

typedef enum KrStatus {
  KR_STATUS_OK = 0,
  KR_STATUS_NULL_POINTER = 1,
  KR_STATUS_INVALID_ARGUMENT = 2,
  KR_STATUS_PARSE = 3,
  KR_STATUS_IO = 4,
  KR_STATUS_GUARD_EXCEEDED = 5,
  KR_STATUS_INVALID_PACKING = 6,
  KR_STATUS_CORRUPT = 7,
  KR_STATUS_PANIC = 8,
} KrStatus;

typedef struct KrFormula KrFormula;

typedef struct KrGraph KrGraph;

typedef struct KrPacking KrPacking;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *kr_last_error(void);

/**
 * Static version string.
 */
const char *kr_version(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`, 0-based). `edges` may be NULL when
 * `edge_count` is 0.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values; `out` must be
 * writable.
 */
enum KrStatus kr_graph_new(size_t n, const size_t *edges, size_t edge_count, struct KrGraph **out);

/**
 * Parses DIMACS edge format text.
 *
 * # Safety
 * `dimacs` must be a NUL-terminated string; `out` must be writable.
 */
enum KrStatus kr_graph_from_dimacs(const char *dimacs, struct KrGraph **out);

/**
 * Reads a DIMACS edge file.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum KrStatus kr_graph_read(const char *path, struct KrGraph **out);

/**
 * DIMACS text of `g` (edges sorted).
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum KrStatus kr_graph_to_dimacs(const struct KrGraph *g, char **out);

/**
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void kr_graph_free(struct KrGraph *g);

/**
 * 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t kr_graph_vertex_count(const struct KrGraph *g);

/**
 * 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t kr_graph_edge_count(const struct KrGraph *g);

/**
 * Δ(G); 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t kr_graph_max_degree(const struct KrGraph *g);

/**
 * Complexity regime of K_r packing at maximum degree `delta`.
 *
 * # Safety
 * `out` must be writable.
 */
enum KrStatus kr_classify(size_t r, size_t delta, enum KrMode m, enum KrRegime *out);

/**
 * Packs K_r's in `g`. `t` is the swap size for the local method;
 * `max_cliques` guards the exact method (0 means the default guard).
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum KrStatus kr_solve(const struct KrGraph *g,
                       size_t r,
                       enum KrMode m,
                       enum KrMethod method,
                       size_t t,
                       size_t max_cliques,
                       struct KrPacking **out);

/**
 * Number of cliques; 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live packing handle.
 */
size_t kr_packing_len(const struct KrPacking *p);

/**
 * Clique size r; 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live packing handle.
 */
size_t kr_packing_r(const struct KrPacking *p);

/**
 * Copies the sorted 0-based vertices of clique `index` into `vertices`,
 * which must hold at least `capacity >= r` entries.
 *
 * # Safety
 * `p` must be a live packing handle; `vertices` must have room for
 * `capacity` values.
 */
enum KrStatus kr_packing_clique(const struct KrPacking *p,
                                size_t index,
                                size_t *vertices,
                                size_t capacity);

/**
 * JSON record `{"mode", "r", "cliques" (1-based), "size"}`.
 *
 * # Safety
 * `p` must be a live packing handle; `out` must be writable.
 */
enum KrStatus kr_packing_to_json(const struct KrPacking *p, char **out);

/**
 * # Safety
 * `p` must be NULL or a handle not yet freed.
 */
void kr_packing_free(struct KrPacking *p);

/**
 * Parses DIMACS CNF text (clauses of one or two literals, each variable
 * in at most three clauses).
 *
 * # Safety
 * `cnf` must be a NUL-terminated string; `out` must be writable.
 */
enum KrStatus kr_formula_from_dimacs(const char *cnf, struct KrFormula **out);

/**
 * # Safety
 * `f` must be NULL or a handle not yet freed.
 */
void kr_formula_free(struct KrFormula *f);

/**
 * 0 for NULL.
 *
 * # Safety
 * `f` must be NULL or a live formula handle.
 */
size_t kr_formula_variable_count(const struct KrFormula *f);

/**
 * Exact MaxSAT optimum by enumeration (at most 24 variables). If
 * `assignment` is not NULL it receives the lexicographically least optimal
 * assignment, one byte (0/1) per variable.
 *
 * # Safety
 * `f` must be a live formula handle; `optimum` must be writable;
 * `assignment` must be NULL or have room for one byte per variable.
 */
enum KrStatus kr_maxsat_optimum(const struct KrFormula *f, size_t *optimum, uint8_t *assignment);

/**
 * MIS → VDK_r reduction of a triangle-free graph with Δ ≤ 3.
 *
 * # Safety
 * `source` must be a live graph handle; `out` must be writable.
 */
enum KrStatus kr_reduce_vdkr(const struct KrGraph *source, size_t r, struct KrGraph **out);

/**
 * MAX2SAT(3) → EDK_r reduction for `r` = 4 or 5. `offset` (may be NULL)
 * receives Σ c·m_i, so that the EDK_r optimum of the target equals
 * `offset` plus the MaxSAT optimum.
 *
 * # Safety
 * `source` must be a live formula handle; `out` must be writable;
 * `offset` must be NULL or writable.
 */
enum KrStatus kr_reduce_edk(const struct KrFormula *source,
                            size_t r,
                            struct KrGraph **out,
                            size_t *offset);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void kr_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KRPACK_H */
