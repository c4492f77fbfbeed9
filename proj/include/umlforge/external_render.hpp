// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_EXTERNAL_RENDER_HPP
#define UMLFORGE_EXTERNAL_RENDER_HPP

#include <string>
#include <string_view>

#include "umlforge/render.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

/// Adapter for an out-of-process rendering tool (PlantUML or compatible).
/// The command template runs under /bin/sh with {input} and {output} replaced
/// by temp file paths; the tool must write a PNG to {output}.
struct ExternalRendererConfig {
    std::string command_template;  // e.g. "plantuml -tpng -pipe < {input} > {output}"
    double timeout_seconds = 30.0;
};

enum class ExternalErrorKind { Unavailable, Timeout };

struct ExternalError {
    ExternalErrorKind kind;
    std::string message;
};

/// Nonzero exit or an undecodable output file map to a SyntaxFailure outcome
/// with provenance "external"; only a missing tool or a timeout are errors.
Result<RenderOutcome, ExternalError> external_render(std::string_view source,
                                                     const ExternalRendererConfig& config);

}  // namespace umlforge

#endif
