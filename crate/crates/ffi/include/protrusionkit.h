#ifndef PROTRUSIONKIT_H
#define PROTRUSIONKIT_H

#include <stdbool.h>
#include <stddef.h>

typedef enum PkStatus {
  PK_STATUS_OK = 0,
  // The instance has no solution within the budget.
  PK_STATUS_NO = 1,
  PK_STATUS_NULL_POINTER = -1,
  PK_STATUS_INVALID_ARGUMENT = -2,
  // A size cap of an exact routine was exceeded.
  PK_STATUS_LIMIT_EXCEEDED = -3,
  // The modulator does not bound the treewidth as required.
  PK_STATUS_INVALID_MODULATOR = -4,
  PK_STATUS_PARSE = -5,
  PK_STATUS_BUFFER_TOO_SMALL = -6,
  PK_STATUS_INTERNAL = -7,
} PkStatus;

typedef struct PkFamily PkFamily;

typedef struct PkGraph PkGraph;

typedef struct PkProtrusionDecomposition PkProtrusionDecomposition;

// Message of the last failed call on this thread, or null. Valid until the
// next failing call on the same thread.
const char *pk_last_error_message(void);

// A graph on vertices `0..n` without edges.
struct PkGraph *pk_graph_new(size_t n);

// # Safety
// `g` must be null or a handle from this library not yet freed.
void pk_graph_free(struct PkGraph *g);

// # Safety
// `g` must be a live graph handle.
enum PkStatus pk_graph_add_edge(struct PkGraph *g, size_t u, size_t v);

// Parses the text format (`n m` header, one `u v` edge per line).
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum PkStatus pk_graph_parse(const char *text, struct PkGraph **out);

// # Safety
// `g` must be a live graph handle.
size_t pk_graph_vertex_count(const struct PkGraph *g);

// # Safety
// `g` must be a live graph handle.
size_t pk_graph_edge_count(const struct PkGraph *g);

// Whether `h` is a minor of `g`.
//
// # Safety
// `h` and `g` must be live graph handles and `out` writable.
enum PkStatus pk_is_minor(const struct PkGraph *h, const struct PkGraph *g, bool *out);

// Exact treewidth.
//
// # Safety
// `g` must be a live graph handle and `out` writable.
enum PkStatus pk_treewidth(const struct PkGraph *g, size_t *out);

// Protrusion decomposition for the modulator `x[0..x_len]`.
//
// # Safety
// `g` must be a live graph handle, `x` must point to `x_len` values and
// `out` must be writable.
enum PkStatus pk_protrusion_decompose(const struct PkGraph *g,
                                      const size_t *x,
                                      size_t x_len,
                                      size_t r,
                                      size_t t,
                                      struct PkProtrusionDecomposition **out);

// # Safety
// `pd` must be null or a live decomposition handle.
void pk_protrusion_free(struct PkProtrusionDecomposition *pd);

// `|Y0|`.
//
// # Safety
// `pd` must be a live decomposition handle.
size_t pk_protrusion_y0_size(const struct PkProtrusionDecomposition *pd);

// Number of clusters `ℓ`.
//
// # Safety
// `pd` must be a live decomposition handle.
size_t pk_protrusion_cluster_count(const struct PkProtrusionDecomposition *pd);

// The decomposition as JSON; release with [`pk_string_free`].
//
// # Safety
// `pd` must be a live decomposition handle.
char *pk_protrusion_to_json(const struct PkProtrusionDecomposition *pd);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void pk_string_free(char *s);

// Kernelizes Edge Dominating Set. Writes the reduced graph and budget, or
// returns [`PkStatus::No`] when the matching bound rejects the instance.
//
// # Safety
// `g` must be a live graph handle; `out_graph` and `out_k` writable.
enum PkStatus pk_eds_kernelize(const struct PkGraph *g,
                               size_t k,
                               size_t r,
                               struct PkGraph **out_graph,
                               size_t *out_k);

// A family from `len` pattern graphs; the patterns are copied.
//
// # Safety
// `patterns` must point to `len` live graph handles and `out` be writable.
enum PkStatus pk_family_new(const struct PkGraph *const *patterns,
                            size_t len,
                            struct PkFamily **out);

// # Safety
// `f` must be null or a live family handle.
void pk_family_free(struct PkFamily *f);

// Solves Planar-F-Deletion. On success writes the solution into
// `out[0..*out_len]`; returns [`PkStatus::No`] when none of size `k`
// exists and [`PkStatus::BufferTooSmall`] (with `*out_len` set) when
// `capacity` is too small. `tf` of zero selects the built-in bound.
//
// # Safety
// `g`, `f` must be live handles, `out` must have room for `capacity`
// values and `out_len` must be writable.
enum PkStatus pk_fdeletion_solve(const struct PkGraph *g,
                                 const struct PkFamily *f,
                                 size_t k,
                                 size_t tf,
                                 size_t *out,
                                 size_t capacity,
                                 size_t *out_len);

#endif  /* PROTRUSIONKIT_H */
