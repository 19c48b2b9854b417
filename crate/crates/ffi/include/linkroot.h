#ifndef LINKROOT_H
#define LINKROOT_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum LrStatus {
  LR_STATUS_OK = 0,
  LR_STATUS_NULL_POINTER = 1,
  LR_STATUS_INVALID_ARGUMENT = 2,
  LR_STATUS_PARSE = 3,
  LR_STATUS_CAP_EXCEEDED = 4,
  LR_STATUS_BUDGET = 5,
  LR_STATUS_NOT_MINIMAL = 6,
  LR_STATUS_INTERNAL = 7,
} LrStatus;

/**
 * Opaque multigraph handle.
 */
typedef struct LrGraph LrGraph;

/**
 * Opaque set of minimal roots, ordered by canonical form.
 */
typedef struct LrRootSet LrRootSet;

/**
 * Component census of the partitioned ℓ-link graph.
 */
typedef struct LrCensus {
  size_t cyclic;
  size_t acyclic;
} LrCensus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *lr_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void lr_string_free(char *s);

/**
 * Graph with `n` vertices and no edges.
 */
struct LrGraph *lr_graph_new(size_t n);

/**
 * # Safety
 * `g` must be null or a handle from this library, not yet freed.
 */
void lr_graph_free(struct LrGraph *g);

/**
 * Appends edge `u-v`; its id is written to `out_edge` when that is non-null.
 *
 * # Safety
 * `g` must be a live handle; `out_edge` null or writable.
 */
enum LrStatus lr_graph_add_edge(struct LrGraph *g, size_t u, size_t v, size_t *out_edge);

/**
 * Parses the `mg 1` text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` writable.
 */
enum LrStatus lr_graph_parse(const char *text, struct LrGraph **out);

/**
 * # Safety
 * `g` must be a live handle. Returns null if `g` is null.
 */
char *lr_graph_to_text(const struct LrGraph *g);

/**
 * # Safety
 * `g` must be null or a live handle; null yields 0.
 */
size_t lr_graph_vertex_count(const struct LrGraph *g);

/**
 * # Safety
 * `g` must be null or a live handle; null yields 0.
 */
size_t lr_graph_edge_count(const struct LrGraph *g);

/**
 * Endpoints of edge `e`.
 *
 * # Safety
 * `g` must be a live handle; `u` and `v` writable.
 */
enum LrStatus lr_graph_edge(const struct LrGraph *g, size_t e, size_t *u, size_t *v);

/**
 * The ℓ-link graph of `g`.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum LrStatus lr_link_graph(const struct LrGraph *g, size_t ell, struct LrGraph **out);

/**
 * The ℓ-path graph of `g`.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum LrStatus lr_path_graph(const struct LrGraph *g, size_t ell, struct LrGraph **out);

/**
 * The ℓ-incidence subgraph `G[ℓ]`.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum LrStatus lr_incidence_subgraph(const struct LrGraph *g, size_t ell, struct LrGraph **out);

/**
 * ℓ-minimality, or ℓ-path-minimality when `path_mode` is set.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum LrStatus lr_is_minimal(const struct LrGraph *g, size_t ell, bool path_mode, bool *out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` writable.
 */
enum LrStatus lr_is_equivalent(const struct LrGraph *a,
                               const struct LrGraph *b,
                               size_t ell,
                               bool *out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` writable.
 */
enum LrStatus lr_is_isomorphic(const struct LrGraph *a, const struct LrGraph *b, bool *out);

/**
 * Canonical form as lowercase hex; equal strings iff isomorphic graphs.
 *
 * # Safety
 * `g` must be a live handle. Returns null if `g` is null.
 */
char *lr_canonical_hex(const struct LrGraph *g);

/**
 * Cyclic and acyclic component counts of the partitioned ℓ-link graph.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum LrStatus lr_census(const struct LrGraph *g, size_t ell, struct LrCensus *out);

/**
 * All minimal ℓ-roots of `h` (ℓ-path-roots when `path_mode` is set).
 * `budget_secs <= 0` means no time limit.
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum LrStatus lr_roots(const struct LrGraph *h,
                       size_t ell,
                       bool path_mode,
                       double budget_secs,
                       struct LrRootSet **out);

/**
 * # Safety
 * `set` must be null or a live handle; null yields 0.
 */
size_t lr_root_set_len(const struct LrRootSet *set);

/**
 * Borrowed root `i`, owned by `set`; null when out of range. Do not free.
 *
 * # Safety
 * `set` must be null or a live handle.
 */
const struct LrGraph *lr_root_set_get(const struct LrRootSet *set, size_t i);

/**
 * # Safety
 * `set` must be null or a handle from [`lr_roots`], not yet freed.
 */
void lr_root_set_free(struct LrRootSet *set);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LINKROOT_H */
