/* Build: cargo build -p brtpoly-ffi && cc crates/ffi/examples/smoke.c -Icrates/ffi/include
 *        target/debug/libbrtpoly_ffi.a -lpthread -ldl -lm -o smoke */
#include <stdio.h>
#include "brtpoly.h"

int main(void) {
    const char *json =
        "{\"sigma0\": [[1,3,2,5],[7,9],[10,4,12,8,6,11]],"
        " \"sigma1\": [[1,2],[3,4],[5,6],[7,8],[9,10],[11,12]]}";
    BrtGraph *g = NULL;
    if (brt_graph_from_json(json, &g) != BRT_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", brt_last_error_message());
        return 1;
    }
    BrtCounts c;
    brt_graph_counts(g, &c);
    printf("v=%llu e=%llu f=%llu g=%llu\n", (unsigned long long)c.vertices,
           (unsigned long long)c.edges, (unsigned long long)c.faces, (unsigned long long)c.genus);

    char *poly = NULL;
    if (brt_polynomial(g, BRT_METHOD_QUASI_TREE, 0, &poly) != BRT_STATUS_OK) {
        fprintf(stderr, "polynomial: %s\n", brt_last_error_message());
        brt_graph_free(g);
        return 1;
    }
    printf("C = %s\n", poly);
    brt_string_free(poly);

    uint64_t hist[8];
    uintptr_t len = 0;
    brt_genus_histogram(g, hist, 8, &len);
    printf("quasi-trees by genus:");
    for (uintptr_t i = 0; i < len; i++) printf(" %llu", (unsigned long long)hist[i]);
    printf("\n");

    if (brt_polynomial(g, 42, 0, &poly) != BRT_STATUS_OK)
        printf("expected error: %s\n", brt_last_error_message());
    brt_graph_free(g);
    printf("version %s\n", brt_version());
    return 0;
}
