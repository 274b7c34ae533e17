/* Minimal consumer of the C API. Build (from the repository root):
 *
 *   cargo build --release -p qcg8-ffi
 *   cc -std=c99 -I crates/ffi/include crates/ffi/examples/smoke.c \
 *      target/release/libqcg8_ffi.a -lpthread -ldl -lm -o smoke
 */
#include <assert.h>
#include <stdio.h>

#include "qcg8.h"

int main(void) {
    QcgConstruction *c = NULL;
    assert(qcg_construct(7, 11, &c) == QCG_STATUS_OK);

    char family[16];
    assert(qcg_construction_family(c, family, sizeof family) == QCG_STATUS_OK);

    uint32_t girth;
    assert(qcg_girth(c, 407, &girth) == QCG_STATUS_OK);
    printf("%s at P=407: girth %u\n", family, girth);

    QcgBounds b;
    assert(qcg_bounds(7, 12, &b) == QCG_STATUS_OK);
    printf("bounds(7,12): floor=%llu special=%llu ccs=%llu lower=%llu upper=%llu\n",
           (unsigned long long)b.search_floor, (unsigned long long)b.special_p,
           (unsigned long long)b.ccs_class_bound,
           (unsigned long long)b.global_lower_bound,
           (unsigned long long)b.min_p_upper_bound);

    QcgPcm *h = NULL;
    assert(qcg_expand(c, 407, &h) == QCG_STATUS_OK);
    uint32_t bfs_girth;
    assert(qcg_pcm_graph_girth(h, 10, &bfs_girth) == QCG_STATUS_OK);
    assert(bfs_girth == girth);
    assert(qcg_pcm_write_alist(h, "j7_l11_p407.alist") == QCG_STATUS_OK);

    uint64_t min_p;
    assert(qcg_search_min_p(7, 12, &min_p) == QCG_STATUS_OK);
    printf("smallest feasible P for (7,12): %llu\n", (unsigned long long)min_p);

    qcg_pcm_free(h);
    qcg_construction_free(c);
    puts("ok");
    return 0;
}
