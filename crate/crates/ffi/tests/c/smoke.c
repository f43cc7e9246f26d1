#include <stdio.h>
#include <string.h>
#include "grigorchuk.h"

#define CHECK(expr) do { if (!(expr)) { fprintf(stderr, "failed: %s (%s)\n", #expr, grg_last_error()); return 1; } } while (0)

int main(void) {
    GrgOmega *omega = NULL;
    GrgElement *g = NULL;
    GrgVertex *v = NULL, *image = NULL;
    char *text = NULL;
    size_t order = 0, distance = 0;
    bool trivial = false;

    CHECK(grg_omega_parse(":012", &omega) == GRG_STATUS_OK);
    CHECK(grg_element_parse(omega, "adadadad", &g) == GRG_STATUS_OK);
    CHECK(grg_element_is_trivial(g, &trivial) == GRG_STATUS_OK && trivial);
    grg_element_free(g);

    CHECK(grg_element_parse(omega, "b", &g) == GRG_STATUS_OK);
    CHECK(grg_vertex_parse("v0", &v) == GRG_STATUS_OK);
    CHECK(grg_vertex_act(v, g, &image) == GRG_STATUS_OK);
    CHECK(grg_vertex_to_string(image, &text) == GRG_STATUS_OK);
    CHECK(strcmp(text, "0inf,01") == 0);
    grg_string_free(text);
    CHECK(grg_vertex_distance(v, image, &distance) == GRG_STATUS_OK && distance == 2);

    CHECK(grg_stabilizer(omega, GRG_TARGET_GAMMA_PLUS, 6, &order, &text) == GRG_STATUS_OK);
    CHECK(order == 8 && strcmp(text, "D8") == 0);
    grg_string_free(text);

    CHECK(grg_element_parse(omega, "xyz", &g) == GRG_STATUS_INVALID_WORD);
    CHECK(grg_last_error() != NULL);

    grg_vertex_free(v);
    grg_vertex_free(image);
    grg_omega_free(omega);
    printf("ok\n");
    return 0;
}
