#include <stdio.h>
#include <string.h>

#include "steinberg.h"

static int check(StStatus s, const char *what) {
    if (s != ST_STATUS_OK) {
        char *msg = NULL;
        st_last_error(&msg);
        fprintf(stderr, "%s: status %d: %s\n", what, (int)s, msg ? msg : "?");
        st_string_free(msg);
        return 1;
    }
    return 0;
}

int main(void) {
    StRep *rep = NULL;
    if (check(st_rep_parse("wedge^2(b)*b", &rep), "parse")) return 1;
    uint64_t dim = 0, mult = 0;
    if (check(st_rep_dim(rep, &dim), "dim")) return 1;
    if (check(st_rep_multiplicity(rep, 0, 0, &mult), "multiplicity")) return 1;
    char *chi = NULL;
    if (check(st_rep_euler_char(rep, &chi), "chi")) return 1;
    printf("dim %llu zero %llu chi %s\n", (unsigned long long)dim, (unsigned long long)mult, chi);
    st_string_free(chi);
    st_rep_free(rep);

    StReport *report = NULL;
    if (check(st_verify("multiplicities", 0, &report), "verify")) return 1;
    size_t n = 0;
    uint8_t ok = 0;
    st_report_len(report, &n);
    st_report_passed(report, &ok);
    printf("entries %zu passed %u\n", n, (unsigned)ok);
    st_report_free(report);

    if (st_rep_parse("wedge^2(b", &rep) != ST_STATUS_PARSE_ERROR) return 1;
    printf("version %s\n", st_version());
    return 0;
}
