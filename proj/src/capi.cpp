// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "umlforge/ast.hpp"
#include "umlforge/bleu.hpp"
#include "umlforge/detect.hpp"
#include "umlforge/error_analysis.hpp"
#include "umlforge/parse.hpp"
#include "umlforge/pipeline.hpp"
#include "umlforge/png.hpp"
#include "umlforge/render.hpp"
#include "umlforge/ssim.hpp"
#include "umlforge/validate.hpp"

using namespace umlforge;

struct uf_ast {
    DiagramAst ast;
};

struct uf_image {
    RasterImage image;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** out_error, const std::string& message) {
    if (out_error) *out_error = dup_string(message);
}

}  // namespace

extern "C" {

const char* uf_status_name(uf_status status) {
    switch (status) {
        case UF_OK: return "ok";
        case UF_ERR_INVALID_ARG: return "invalid-argument";
        case UF_ERR_PARSE: return "parse-error";
        case UF_ERR_VALIDATION: return "validation-error";
        case UF_ERR_IO: return "io-error";
        case UF_ERR_DATA: return "data-error";
        case UF_ERR_ENDPOINT: return "endpoint-error";
        case UF_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

void uf_string_free(char* s) { std::free(s); }

uf_status uf_parse(const char* source, int strict, uf_ast** out_ast,
                   char** out_error) {
    if (!source || !out_ast) {
        set_error(out_error, "source and out_ast are required");
        return UF_ERR_INVALID_ARG;
    }
    *out_ast = nullptr;
    ParseOptions options;
    options.auto_declare_participants = strict == 0;
    auto parsed = parse(source, options);
    if (!parsed) {
        const ParseError& e = parsed.error();
        set_error(out_error, std::string(to_string(e.code)) + " at line " +
                                 std::to_string(e.line) + ": " + e.message);
        return UF_ERR_PARSE;
    }
    *out_ast = new (std::nothrow) uf_ast{std::move(parsed).value()};
    if (!*out_ast) {
        set_error(out_error, "out of memory");
        return UF_ERR_INTERNAL;
    }
    return UF_OK;
}

void uf_ast_free(uf_ast* ast) { delete ast; }

uf_diagram_kind uf_ast_kind(const uf_ast* ast) {
    return ast && ast->ast.kind() == DiagramKind::Activity ? UF_KIND_ACTIVITY
                                                           : UF_KIND_SEQUENCE;
}

char* uf_ast_print(const uf_ast* ast) {
    if (!ast) return nullptr;
    return dup_string(print(ast->ast));
}

size_t uf_ast_validate(const uf_ast* ast, char** out_error) {
    if (!ast) return 0;
    auto violations = validate(ast->ast);
    if (!violations.empty() && out_error) {
        std::string joined;
        for (const Violation& v : violations) {
            if (!joined.empty()) joined += '\n';
            joined += std::string(to_string(v.code)) + " at element " +
                      std::to_string(v.element_index) + ": " + v.message;
        }
        *out_error = dup_string(joined);
    }
    return violations.size();
}

uf_kind_guess uf_detect_kind(const char* text) {
    switch (detect_kind(text ? text : "")) {
        case DiagramKindGuess::Sequence: return UF_GUESS_SEQUENCE;
        case DiagramKindGuess::Activity: return UF_GUESS_ACTIVITY;
        case DiagramKindGuess::OtherUml: return UF_GUESS_OTHER_UML;
        case DiagramKindGuess::NotUml: return UF_GUESS_NOT_UML;
    }
    return UF_GUESS_NOT_UML;
}

char* uf_extract_uml_block(const char* response) {
    if (!response) return nullptr;
    auto block = extract_uml_block(response);
    return block ? dup_string(*block) : nullptr;
}

uf_status uf_render_ast(const uf_ast* ast, uf_image** out_image, char** out_error) {
    if (!ast || !out_image) {
        set_error(out_error, "ast and out_image are required");
        return UF_ERR_INVALID_ARG;
    }
    auto rendered = render_ast(ast->ast);
    if (!rendered) {
        set_error(out_error, rendered.error().message);
        return UF_ERR_VALIDATION;
    }
    *out_image = new uf_image{std::move(rendered).value()};
    return UF_OK;
}

uf_status uf_render_source(const char* source, uf_image** out_image,
                           int* out_syntax_failure) {
    if (!source || !out_image) return UF_ERR_INVALID_ARG;
    RenderOutcome outcome = render_candidate(source);
    if (out_syntax_failure) *out_syntax_failure = outcome.ok ? 0 : 1;
    *out_image = new uf_image{std::move(outcome.image)};
    return UF_OK;
}

void uf_image_free(uf_image* image) { delete image; }

uint32_t uf_image_width(const uf_image* image) {
    return image ? static_cast<uint32_t>(image->image.width) : 0;
}

uint32_t uf_image_height(const uf_image* image) {
    return image ? static_cast<uint32_t>(image->image.height) : 0;
}

const uint8_t* uf_image_pixels(const uf_image* image) {
    return image ? image->image.pixels.data() : nullptr;
}

uf_status uf_image_write_png(const uf_image* image, const char* path,
                             char** out_error) {
    if (!image || !path) {
        set_error(out_error, "image and path are required");
        return UF_ERR_INVALID_ARG;
    }
    auto written = write_png_gray(image->image, path);
    if (!written.ok()) {
        set_error(out_error, written.error().message);
        return UF_ERR_IO;
    }
    return UF_OK;
}

uf_status uf_image_read_png(const char* path, uf_image** out_image,
                            char** out_error) {
    if (!path || !out_image) {
        set_error(out_error, "path and out_image are required");
        return UF_ERR_INVALID_ARG;
    }
    auto decoded = read_png_gray(path);
    if (!decoded) {
        set_error(out_error, decoded.error().message);
        return UF_ERR_IO;
    }
    *out_image = new uf_image{std::move(decoded).value()};
    return UF_OK;
}

uf_status uf_bleu(const char* candidate, const char* reference, double* out_value,
                  char** out_error) {
    if (!candidate || !reference || !out_value) {
        set_error(out_error, "candidate, reference and out_value are required");
        return UF_ERR_INVALID_ARG;
    }
    auto score = bleu(tokenize(candidate), tokenize(reference));
    if (!score.ok()) {
        set_error(out_error, score.error().message);
        return UF_ERR_DATA;
    }
    *out_value = score.value().value;
    return UF_OK;
}

uf_status uf_ssim(const uf_image* a, const uf_image* b, double* out_value,
                  char** out_error) {
    if (!a || !b || !out_value) {
        set_error(out_error, "both images and out_value are required");
        return UF_ERR_INVALID_ARG;
    }
    auto score = ssim(a->image, b->image);
    if (!score.ok()) {
        set_error(out_error, score.error().message);
        return UF_ERR_DATA;
    }
    *out_value = score.value().value;
    return UF_OK;
}

uf_error_category uf_classify(const char* response, uf_diagram_kind expected) {
    DiagramKind kind = expected == UF_KIND_ACTIVITY ? DiagramKind::Activity
                                                    : DiagramKind::Sequence;
    switch (classify(response ? response : "", kind)) {
        case ErrorCategory::Clean: return UF_CATEGORY_CLEAN;
        case ErrorCategory::SyntaxError: return UF_CATEGORY_SYNTAX_ERROR;
        case ErrorCategory::UmlAbsence: return UF_CATEGORY_UML_ABSENCE;
        case ErrorCategory::DiagramMismatch: return UF_CATEGORY_DIAGRAM_MISMATCH;
    }
    return UF_CATEGORY_CLEAN;
}

uf_status uf_generate_corpus(const uf_generate_options* options, char** out_error) {
    if (!options || !options->out_dir || !options->size_class) {
        set_error(out_error, "out_dir and size_class are required");
        return UF_ERR_INVALID_ARG;
    }
    GenerateOptions gen;
    gen.out_dir = options->out_dir;
    gen.config.seed = options->seed;
    gen.config.kind = options->kind == UF_KIND_ACTIVITY ? DiagramKind::Activity
                                                        : DiagramKind::Sequence;
    if (!size_class_from_string(options->size_class, gen.config.size_class)) {
        set_error(out_error, std::string("unknown size class: ") + options->size_class);
        return UF_ERR_INVALID_ARG;
    }
    gen.count_override = options->count_override;
    gen.jobs = options->jobs > 0 ? options->jobs : 1;
    auto generated = generate_corpus_dir(gen);
    if (!generated) {
        set_error(out_error, generated.error());
        return UF_ERR_IO;
    }
    return UF_OK;
}

uf_status uf_evaluate_corpus(const uf_evaluate_options* options, char** out_error) {
    if (!options || !options->corpus_dir || !options->report_path) {
        set_error(out_error, "corpus_dir and report_path are required");
        return UF_ERR_INVALID_ARG;
    }
    const bool online = options->endpoint && options->endpoint[0] != '\0';
    if (!online && (!options->responses_file || options->responses_file[0] == '\0')) {
        set_error(out_error, "either endpoint or responses_file is required");
        return UF_ERR_INVALID_ARG;
    }
    EvaluateOptions eval;
    eval.corpus_dir = options->corpus_dir;
    eval.endpoint = online ? options->endpoint : "";
    if (options->responses_file) eval.responses_file = options->responses_file;
    eval.report_path = options->report_path;
    eval.model_label = options->model_label ? options->model_label : "offline";
    eval.net = endpoint_config_from_env(eval.endpoint);
    eval.net.model = eval.model_label;
    if (options->timeout_seconds > 0) eval.net.timeout_seconds = options->timeout_seconds;
    if (options->max_concurrent > 0) eval.net.max_concurrent = options->max_concurrent;
    if (options->max_retries >= 0) eval.net.max_retries = options->max_retries;
    eval.jobs = options->jobs > 0 ? options->jobs : 1;
    eval.limit = options->limit;
    auto evaluated = evaluate_corpus(eval);
    if (!evaluated.ok()) {
        set_error(out_error, evaluated.error().message);
        return evaluated.error().kind == EvalErrorKind::Endpoint ? UF_ERR_ENDPOINT
                                                                 : UF_ERR_DATA;
    }
    return UF_OK;
}

uf_status uf_report_tables(const uf_report_options* options, char** out_error) {
    if (!options || !options->inputs || options->input_count == 0 ||
        !options->format || !options->out_path) {
        set_error(out_error, "inputs, format and out_path are required");
        return UF_ERR_INVALID_ARG;
    }
    ReportFormat format;
    if (std::strcmp(options->format, "csv") == 0) {
        format = ReportFormat::Csv;
    } else if (std::strcmp(options->format, "markdown") == 0) {
        format = ReportFormat::Markdown;
    } else {
        set_error(out_error, std::string("unknown format: ") + options->format);
        return UF_ERR_INVALID_ARG;
    }
    std::vector<std::filesystem::path> inputs;
    for (size_t i = 0; i < options->input_count; ++i) inputs.emplace_back(options->inputs[i]);
    auto report = report_tables(inputs, format, options->out_path);
    if (!report.ok()) {
        set_error(out_error, report.error());
        return UF_ERR_DATA;
    }
    return UF_OK;
}

}  // extern "C"
