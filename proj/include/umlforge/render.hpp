// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_RENDER_HPP
#define UMLFORGE_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "umlforge/ast.hpp"
#include "umlforge/parse.hpp"
#include "umlforge/raster.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

/// Fixed canvas in pixels; zero dimensions auto-size from content. A fixed
/// canvas must be at least the auto size; the content keeps its top-left
/// placement and the extra area is white padding.
struct RenderOptions {
    int canvas_width = 0;
    int canvas_height = 0;
};

struct RenderError {
    std::string message;  // CanvasTooSmall is the only failure on valid ASTs
};

/// Deterministic integer-only rasterization. The same AST always produces an
/// identical pixel buffer; no system fonts, no anti-aliasing.
Result<RasterImage, RenderError> render_ast(const DiagramAst& ast,
                                            const RenderOptions& options = {});

/// The fixed 512x512 mid-gray plate substituted for unrenderable candidates.
RasterImage error_plate();

struct RenderOutcome {
    bool ok = false;
    RasterImage image;                 // diagram when ok, error plate otherwise
    std::optional<ParseError> error;   // set when !ok
    std::string provenance = "internal";
};

/// Parse + validate + render. Any failure yields the error plate instead of
/// an image so downstream visual scoring stays total.
RenderOutcome render_candidate(std::string_view source);

}  // namespace umlforge

#endif
