#include <stdio.h>
#include <string.h>

#include "linkroot.h"

#define CHECK(cond)                                                    \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                  \
        }                                                              \
    } while (0)

int main(void) {
    LrGraph *claw = lr_graph_new(4);
    for (size_t leaf = 1; leaf < 4; leaf++) {
        CHECK(lr_graph_add_edge(claw, 0, leaf, NULL) == LR_STATUS_OK);
    }
    LrGraph *tri = NULL;
    CHECK(lr_graph_parse("mg 1\nn 3\ne 0 1\ne 1 2\ne 2 0\n", &tri) == LR_STATUS_OK);

    LrGraph *link = NULL;
    CHECK(lr_link_graph(claw, 1, &link) == LR_STATUS_OK);
    bool iso = false;
    CHECK(lr_is_isomorphic(link, tri, &iso) == LR_STATUS_OK && iso);

    char *a = lr_canonical_hex(link);
    char *b = lr_canonical_hex(tri);
    CHECK(a && b && strcmp(a, b) == 0);
    lr_string_free(a);
    lr_string_free(b);

    LrGraph *bad = NULL;
    CHECK(lr_graph_parse("mg 1\nn 2\ne 1 1\n", &bad) == LR_STATUS_PARSE);
    CHECK(strstr(lr_last_error_message(), "line 3") != NULL);

    LrRootSet *roots = NULL;
    CHECK(lr_roots(tri, 1, false, 0.0, &roots) == LR_STATUS_OK);
    CHECK(lr_root_set_len(roots) == 2);
    lr_root_set_free(roots);

    lr_graph_free(link);
    lr_graph_free(tri);
    lr_graph_free(claw);
    puts("ok");
    return 0;
}
