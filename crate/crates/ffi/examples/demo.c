/* Minimal consumer of the gembed C ABI.
 *
 * Build against the static library:
 *   cargo build --release -p gembed-ffi
 *   cc demo.c -I../include -L../../../target/release -lgembed_ffi -lpthread -ldl -lm
 */
#include "gembed.h"
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

int main(void) {
    GembedGem *gem = NULL;
    int rc = gembed_gem_from_rotation_text(
        "vertex u: a+ b+ c+\nvertex w: c- b- a-\n", &gem);
    if (rc != GEMBED_OK) {
        fprintf(stderr, "parse failed: %s\n", gembed_last_error());
        return 1;
    }

    struct GembedSummary summary;
    gembed_gem_summary(gem, &summary);
    printf("V=%llu E=%llu F=%llu chi=%lld orientable=%d\n",
           (unsigned long long)summary.vertices,
           (unsigned long long)summary.edges,
           (unsigned long long)summary.faces,
           (long long)summary.euler_characteristic,
           (int)summary.orientable);

    printf("closed 2-cell: %d\n", gembed_is_closed_2cell(gem));
    printf("dual over {a} predicted closed 2-cell: %d\n",
           gembed_conditions_predict(gem, 0x1));

    GembedGem *dual = NULL;
    gembed_partial_dual(gem, 0x1, &dual);
    char *json = NULL;
    gembed_gem_to_json(dual, &json);
    printf("dual gem json is %zu bytes\n", json ? strlen(json) : 0);

    gembed_string_free(json);
    gembed_gem_free(dual);
    gembed_gem_free(gem);
    return 0;
}
