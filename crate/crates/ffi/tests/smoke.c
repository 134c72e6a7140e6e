#include <stdio.h>
#include <string.h>
#include "wreath_lab.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed: %s (line %d)\n", #cond, __LINE__); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    WlFamily *fam = NULL;
    CHECK(wl_family_from_json("{\"groups\":[{\"name\":\"integers\"}]}", &fam) == WL_STATUS_OK);

    WlElement *psi = NULL;
    CHECK(wl_embed(fam, 1, "x1", &psi) == WL_STATUS_OK);
    char *word = NULL;
    CHECK(wl_element_to_word(psi, &word) == WL_STATUS_OK);
    CHECK(strcmp(word, "F s F s^-1 F^-1 s F^-1 s^-1") == 0);
    wl_string_free(word);

    bool member = false;
    char *pre = NULL;
    CHECK(wl_membership(fam, 1, psi, 0, &member, &pre) == WL_STATUS_OK);
    CHECK(member && strcmp(pre, "x1") == 0);
    wl_string_free(pre);

    int32_t sign = 0;
    CHECK(wl_sign(fam, psi, &sign) == WL_STATUS_OK && sign == 1);

    WlElement *s = NULL;
    CHECK(wl_element_parse("s", false, &s) == WL_STATUS_OK);
    CHECK(wl_membership(fam, 1, s, 0, &member, &pre) == WL_STATUS_OK);
    CHECK(!member && pre == NULL);

    WlElement *bad = NULL;
    CHECK(wl_element_parse("q", false, &bad) == WL_STATUS_INVALID_INPUT);
    CHECK(wl_last_error() != NULL);

    wl_element_free(s);
    wl_element_free(psi);
    wl_family_free(fam);
    printf("ok\n");
    return 0;
}
