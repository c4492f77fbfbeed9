/* Copyright (c) 2026 umlforge contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the umlforge shared library. All functions are thread-safe for
 * distinct handles; handles are opaque and freed with their uf_*_free
 * function. Functions returning uf_status set *out_error (when provided) to a
 * malloc'd message on failure; release it with uf_string_free.
 */

#ifndef UMLFORGE_H
#define UMLFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UMLFORGE_API __declspec(dllexport)
#else
#define UMLFORGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uf_status {
    UF_OK = 0,
    UF_ERR_INVALID_ARG = 1,
    UF_ERR_PARSE = 2,
    UF_ERR_VALIDATION = 3,
    UF_ERR_IO = 4,
    UF_ERR_DATA = 5,
    UF_ERR_ENDPOINT = 6,
    UF_ERR_INTERNAL = 7
} uf_status;

typedef enum uf_diagram_kind {
    UF_KIND_SEQUENCE = 0,
    UF_KIND_ACTIVITY = 1
} uf_diagram_kind;

typedef enum uf_kind_guess {
    UF_GUESS_SEQUENCE = 0,
    UF_GUESS_ACTIVITY = 1,
    UF_GUESS_OTHER_UML = 2,
    UF_GUESS_NOT_UML = 3
} uf_kind_guess;

typedef enum uf_error_category {
    UF_CATEGORY_CLEAN = 0,
    UF_CATEGORY_SYNTAX_ERROR = 1,
    UF_CATEGORY_UML_ABSENCE = 2,
    UF_CATEGORY_DIAGRAM_MISMATCH = 3
} uf_error_category;

typedef struct uf_ast uf_ast;
typedef struct uf_image uf_image;

UMLFORGE_API const char* uf_status_name(uf_status status);
UMLFORGE_API void uf_string_free(char* s);

/* ---- grammar ---------------------------------------------------------- */

/* strict != 0 requires participants to be declared before use. */
UMLFORGE_API uf_status uf_parse(const char* source, int strict, uf_ast** out_ast,
                                char** out_error);
UMLFORGE_API void uf_ast_free(uf_ast* ast);
UMLFORGE_API uf_diagram_kind uf_ast_kind(const uf_ast* ast);
/* Canonical source; free with uf_string_free. */
UMLFORGE_API char* uf_ast_print(const uf_ast* ast);
/* Returns the number of invariant violations; when nonzero and out_error is
 * given, *out_error lists them one per line. */
UMLFORGE_API size_t uf_ast_validate(const uf_ast* ast, char** out_error);

UMLFORGE_API uf_kind_guess uf_detect_kind(const char* text);
/* First @startuml...@enduml span or NULL; free with uf_string_free. */
UMLFORGE_API char* uf_extract_uml_block(const char* response);

/* ---- rendering -------------------------------------------------------- */

UMLFORGE_API uf_status uf_render_ast(const uf_ast* ast, uf_image** out_image,
                                     char** out_error);
/* Always yields an image; *out_syntax_failure is set when it is the error
 * plate standing in for an unrenderable candidate. */
UMLFORGE_API uf_status uf_render_source(const char* source, uf_image** out_image,
                                        int* out_syntax_failure);
UMLFORGE_API void uf_image_free(uf_image* image);
UMLFORGE_API uint32_t uf_image_width(const uf_image* image);
UMLFORGE_API uint32_t uf_image_height(const uf_image* image);
/* Row-major 8-bit grayscale, width*height bytes, valid until uf_image_free. */
UMLFORGE_API const uint8_t* uf_image_pixels(const uf_image* image);
UMLFORGE_API uf_status uf_image_write_png(const uf_image* image, const char* path,
                                          char** out_error);
UMLFORGE_API uf_status uf_image_read_png(const char* path, uf_image** out_image,
                                         char** out_error);

/* ---- metrics ---------------------------------------------------------- */

/* Sentence BLEU of tokenized candidate vs reference source text. */
UMLFORGE_API uf_status uf_bleu(const char* candidate, const char* reference,
                               double* out_value, char** out_error);
UMLFORGE_API uf_status uf_ssim(const uf_image* a, const uf_image* b,
                               double* out_value, char** out_error);

/* ---- error taxonomy --------------------------------------------------- */

UMLFORGE_API uf_error_category uf_classify(const char* response,
                                           uf_diagram_kind expected);

/* ---- pipelines -------------------------------------------------------- */

typedef struct uf_generate_options {
    const char* out_dir;
    uf_diagram_kind kind;
    const char* size_class; /* "small" | "medium" | "large" | "xlarge" */
    uint64_t seed;
    uint64_t count_override; /* 0 = size-class target */
    int jobs;                /* <= 0 means 1 */
} uf_generate_options;

UMLFORGE_API uf_status uf_generate_corpus(const uf_generate_options* options,
                                          char** out_error);

typedef struct uf_evaluate_options {
    const char* corpus_dir;
    const char* endpoint;       /* NULL/empty = offline scoring */
    const char* responses_file; /* replay file for offline scoring */
    const char* report_path;
    const char* model_label;    /* NULL = "offline" */
    double timeout_seconds;     /* <= 0 means 60 */
    int max_concurrent;         /* <= 0 means 4 */
    int max_retries;            /* < 0 means 2 */
    int jobs;                   /* <= 0 means 1 */
    uint64_t limit;             /* 0 = all test entries */
} uf_evaluate_options;

UMLFORGE_API uf_status uf_evaluate_corpus(const uf_evaluate_options* options,
                                          char** out_error);

typedef struct uf_report_options {
    const char* const* inputs;
    size_t input_count;
    const char* format; /* "csv" | "markdown" */
    const char* out_path;
} uf_report_options;

UMLFORGE_API uf_status uf_report_tables(const uf_report_options* options,
                                        char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* UMLFORGE_H */
