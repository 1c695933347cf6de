#include <stdio.h>
#include <string.h>
#include "toric_ech.h"

int main(void) {
    TeDomain *d = NULL;
    if (te_domain_from_json("{\"type\":\"ball\",\"r\":\"1\"}", &d) != TE_STATUS_OK) {
        fprintf(stderr, "%s\n", te_last_error());
        return 1;
    }
    char *out = NULL;
    if (te_capacities(d, 6, &out) != TE_STATUS_OK) {
        return 2;
    }
    printf("%s\n", out);
    te_string_free(out);
    te_domain_free(d);
    if (te_domain_from_json("{\"type\":\"ball\"}", &d) != TE_STATUS_PARSE_ERROR) {
        return 3;
    }
    return 0;
}
