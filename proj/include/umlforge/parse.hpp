// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_PARSE_HPP
#define UMLFORGE_PARSE_HPP

#include <string>
#include <string_view>

#include "umlforge/ast.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

enum class ParseErrorCode {
    MissingStartTag,
    MissingEndTag,
    UnknownStatement,
    UnbalancedBlock,
    UndeclaredParticipant,  // strict mode only
    MixedDiagramKinds,
    ValidationFailed,  // used by render_candidate when parsing succeeds but
                       // structural validation does not
};

const char* to_string(ParseErrorCode code);

struct ParseError {
    ParseErrorCode code = ParseErrorCode::UnknownStatement;
    int line = 0;    // 1-based; 0 when not tied to a line
    int column = 1;  // 1-based
    std::string message;
};

struct ParseOptions {
    /// When false, participants referenced by messages or activations must be
    /// declared by an earlier `participant` statement. When true (the PlantUML
    /// default), first use declares them.
    bool auto_declare_participants = true;
};

/// Parses PlantUML-subset source into a diagram AST. Accepts any string;
/// leading/trailing whitespace per line and blank lines are ignored, CRLF
/// input is tolerated.
Result<DiagramAst, ParseError> parse(std::string_view source,
                                     const ParseOptions& options = {});

}  // namespace umlforge

#endif
