/* Copyright (c) 2026 umlforge contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Compile-and-link check that umlforge.h is consumable from plain C11.
 */

#include <stdio.h>
#include <string.h>

#include "umlforge.h"

static int failures = 0;

static void expect(int condition, const char* what) {
    if (!condition) {
        ++failures;
        fprintf(stderr, "FAIL: %s\n", what);
    }
}

int main(void) {
    uf_ast* ast = NULL;
    char* error = NULL;
    uf_status status =
        uf_parse("@startuml\nparticipant A\nA -> B : hi\n@enduml", 0, &ast, &error);
    expect(status == UF_OK, "parse valid sequence");
    expect(ast != NULL, "ast handle returned");
    expect(uf_ast_kind(ast) == UF_KIND_SEQUENCE, "kind is sequence");

    char* printed = uf_ast_print(ast);
    expect(printed != NULL, "print returns text");
    expect(strstr(printed, "participant A") != NULL, "canonical text has decl");
    uf_string_free(printed);

    uf_image* image = NULL;
    int syntax_failure = -1;
    status = uf_render_source("@startuml\nparticipant A\n@enduml", &image,
                              &syntax_failure);
    expect(status == UF_OK, "render source");
    expect(syntax_failure == 0, "valid source is not a syntax failure");
    expect(uf_image_width(image) > 0 && uf_image_height(image) > 0,
           "image has dimensions");
    expect(uf_image_pixels(image) != NULL, "pixel pointer");

    double value = -1.0;
    status = uf_bleu("A -> B", "A -> B", &value, &error);
    expect(status == UF_OK && value == 1.0, "bleu identity");

    expect(uf_classify("no code", UF_KIND_SEQUENCE) == UF_CATEGORY_UML_ABSENCE,
           "classify absence");

    uf_image_free(image);
    uf_ast_free(ast);

    if (failures == 0) printf("capi smoke: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
