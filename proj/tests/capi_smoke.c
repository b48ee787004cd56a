/* Compiles the public header as C and drives a short session through it. */
#include <stdio.h>
#include <string.h>

#include "quiverfact.h"

int main(void) {
    qf_graph *g = NULL;
    char *out = NULL;
    int ok;
    if (qf_graph_from_family("loops:3", &g) != QF_OK) {
        fprintf(stderr, "%s\n", qf_last_error());
        return 1;
    }
    if (qf_genfunc(g, "1", "1", &out) != QF_OK) {
        fprintf(stderr, "%s\n", qf_last_error());
        qf_graph_free(g);
        return 1;
    }
    ok = strcmp(out, "(1-2z) / (1-3z)\n") == 0;
    if (!ok) fprintf(stderr, "unexpected: %s", out);
    qf_string_free(out);
    qf_graph_free(g);
    return ok ? 0 : 1;
}
