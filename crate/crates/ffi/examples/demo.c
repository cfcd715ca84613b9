/* Packs triangles in a bowtie through the C ABI.
 *
 *   cargo build -p krpack-ffi
 *   cc -I crates/ffi/include crates/ffi/examples/demo.c \
 *      target/debug/libkrpack_ffi.a -lpthread -ldl -lm -o demo
 */
#include <stdio.h>

#include "krpack.h"

int main(void) {
    const size_t edges[] = {0, 1, 0, 2, 1, 2, 2, 3, 2, 4, 3, 4};
    KrGraph *g = NULL;
    if (kr_graph_new(5, edges, 6, &g) != KR_STATUS_OK) {
        fprintf(stderr, "graph: %s\n", kr_last_error());
        return 1;
    }

    KrPacking *p = NULL;
    KrStatus st = kr_solve(g, 3, KR_MODE_EDGE, KR_METHOD_EXACT, 2, 0, &p);
    if (st != KR_STATUS_OK) {
        fprintf(stderr, "solve (%d): %s\n", (int)st, kr_last_error());
        kr_graph_free(g);
        return 1;
    }

    char *json = NULL;
    kr_packing_to_json(p, &json);
    printf("%zu %s\n", kr_packing_len(p), json);
    kr_string_free(json);

    KrRegime reg;
    kr_classify(3, kr_graph_max_degree(g), KR_MODE_VERTEX, &reg);
    printf("regime %d\n", (int)reg);

    /* Errors come back as codes plus a message. */
    st = kr_solve(g, 1, KR_MODE_VERTEX, KR_METHOD_GREEDY, 2, 0, &p);
    printf("bad r -> %d\n", (int)st);

    kr_packing_free(p);
    kr_graph_free(g);
    return 0;
}
