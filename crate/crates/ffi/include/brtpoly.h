/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef BRTPOLY_H
#define BRTPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BrtStatus {
  BRT_STATUS_OK = 0,
  BRT_STATUS_NULL_POINTER = 1,
  BRT_STATUS_INVALID_UTF8 = 2,
  BRT_STATUS_INVALID_INPUT = 3,
  BRT_STATUS_DISCONNECTED = 4,
  BRT_STATUS_SIZE_LIMIT = 5,
  BRT_STATUS_MISMATCH = 6,
  BRT_STATUS_BUFFER_TOO_SMALL = 7,
  BRT_STATUS_PANIC = 8,
} BrtStatus;

typedef enum BrtMethod {
  BRT_METHOD_STATE_SUM = 0,
  BRT_METHOD_SPANNING_TREE = 1,
  BRT_METHOD_RECURSIVE = 2,
  BRT_METHOD_QUASI_TREE = 3,
} BrtMethod;

// Opaque ribbon graph handle.
typedef struct BrtGraph BrtGraph;

typedef struct BrtCounts {
  uint64_t vertices;
  uint64_t edges;
  uint64_t faces;
  uint64_t components;
  uint64_t genus;
  uint64_t nullity;
} BrtCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a graph document `{"sigma0": [[...]], "sigma1": [[a, b], ...], "edge_order": [...]}`.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid pointer.
enum BrtStatus brt_graph_from_json(const char *json, struct BrtGraph **out);

// Builds a graph from two permutations of `1..=half_edges` given as image
// arrays: `sigma0[i - 1]` is the image of half-edge `i`.
//
// # Safety
// `sigma0` and `sigma1` must point to `half_edges` readable values.
enum BrtStatus brt_graph_from_permutations(const uint32_t *sigma0,
                                           const uint32_t *sigma1,
                                           uintptr_t half_edges,
                                           struct BrtGraph **out);

// Replaces the edge order. `order` lists 1-based edge indices from lowest
// to highest and must have one entry per edge.
//
// # Safety
// `graph` must be a live handle and `order` must point to `len` values.
enum BrtStatus brt_graph_set_edge_order(struct BrtGraph *graph,
                                        const uint32_t *order,
                                        uintptr_t len);

// Releases a graph handle. Null is ignored.
//
// # Safety
// `graph` must come from this library and not be used afterwards.
void brt_graph_free(struct BrtGraph *graph);

// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum BrtStatus brt_graph_counts(const struct BrtGraph *graph, struct BrtCounts *out);

// Computes `C(X, Y, Z)` in canonical text form. `method` is a
// [`BrtMethod`] value. `cap` bounds the edge
// count for the state sum; 0 selects the default.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum BrtStatus brt_polynomial(const struct BrtGraph *graph,
                              uint32_t method,
                              uintptr_t cap,
                              char **out);

// Same as [`brt_polynomial`] but as a JSON array of
// `{"coeff": "...", "x": .., "y": .., "z": .., "t": ..}` terms.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum BrtStatus brt_polynomial_terms_json(const struct BrtGraph *graph,
                                         uint32_t method,
                                         uintptr_t cap,
                                         char **out);

// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum BrtStatus brt_quasi_tree_count(const struct BrtGraph *graph, uint64_t *out);

// Writes quasi-tree counts indexed by genus into `out[0..capacity]` and the
// number of entries into `*len`. Returns `BufferTooSmall` (with `*len` set)
// when `capacity` is insufficient.
//
// # Safety
// `out` must point to `capacity` writable values (may be null when
// `capacity` is 0) and `len` must be valid.
enum BrtStatus brt_genus_histogram(const struct BrtGraph *graph,
                                   uint64_t *out,
                                   uintptr_t capacity,
                                   uintptr_t *len);

// The quasi-tree table as JSON, rows sorted by bitstring.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum BrtStatus brt_quasi_tree_table_json(const struct BrtGraph *graph, char **out);

// Runs all four methods; the JSON report is written only when they agree,
// otherwise `Mismatch` is returned with both polynomials in the message.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum BrtStatus brt_verify_json(const struct BrtGraph *graph, uintptr_t cap, char **out);

// Duality report as JSON: quasi-tree histograms of the graph and its dual
// and both forms of the identity at `points` seeded rational points.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum BrtStatus brt_duality_json(const struct BrtGraph *graph,
                                uint64_t seed,
                                uintptr_t points,
                                char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void brt_string_free(char *s);

// Message for the most recent failing call on this thread, or an empty
// string. Valid until the next call into this library on the same thread.
const char *brt_last_error_message(void);

// Library version as a static string.
const char *brt_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRTPOLY_H */
