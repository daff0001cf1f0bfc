#include <stdio.h>
#include <string.h>

#include "delpezzo.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    int64_t h[5];
    size_t n = 0;
    CHECK(dp_cohom(DP_VARIETY_F, -2, 2, h, 5, &n) == DP_STATUS_OK);
    CHECK(n == 4 && h[0] == 0 && h[1] == 3 && h[2] == 0 && h[3] == 0);
    CHECK(dp_cohom(7, 0, 0, h, 5, &n) == DP_STATUS_INVALID_VARIETY);
    CHECK(dp_last_error() != NULL);

    DpChowClass *a = NULL, *b = NULL, *c = NULL;
    CHECK(dp_chow_parse(DP_VARIETY_PHI, "eta1 + eta2", &a) == DP_STATUS_OK);
    CHECK(dp_chow_parse(DP_VARIETY_PHI, "(eta1 + eta2)^3", &b) == DP_STATUS_OK);
    CHECK(dp_chow_mul(a, b, &c) == DP_STATUS_OK);
    int64_t d = 0;
    CHECK(dp_chow_degree(c, &d) == DP_STATUS_OK && d == 6);
    char *s = NULL;
    CHECK(dp_chow_to_string(c, &s) == DP_STATUS_OK);
    CHECK(strcmp(s, "6*eta1^2*eta2^2") == 0);
    dp_string_free(s);
    dp_chow_free(a);
    dp_chow_free(b);
    dp_chow_free(c);

    char *t = NULL;
    CHECK(dp_table("section4", "csv", &t) == DP_STATUS_OK);
    CHECK(strstr(t, "koszul-global-generation") != NULL);
    dp_string_free(t);
    puts("ok");
    return 0;
}
