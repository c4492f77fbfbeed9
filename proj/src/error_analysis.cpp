// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/error_analysis.hpp"

#include <cmath>
#include <cstdio>

#include "umlforge/detect.hpp"
#include "umlforge/render.hpp"

namespace umlforge {

const char* to_string(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Clean: return "clean";
        case ErrorCategory::SyntaxError: return "syntax-error";
        case ErrorCategory::UmlAbsence: return "uml-absence";
        case ErrorCategory::DiagramMismatch: return "diagram-mismatch";
    }
    return "unknown";
}

ErrorCategory classify(std::string_view response, DiagramKind expected) {
    std::optional<std::string> block = extract_uml_block(response);
    if (!block) return ErrorCategory::UmlAbsence;

    DiagramKindGuess guess = detect_kind(*block);
    // Valid UML of a foreign dialect is a type error, not a syntax error: the
    // reference rendering toolchain would draw it without complaint.
    if (guess == DiagramKindGuess::OtherUml) return ErrorCategory::DiagramMismatch;

    if (!render_candidate(*block).ok) return ErrorCategory::SyntaxError;

    bool matches = (guess == DiagramKindGuess::Sequence && expected == DiagramKind::Sequence) ||
                   (guess == DiagramKindGuess::Activity && expected == DiagramKind::Activity);
    return matches ? ErrorCategory::Clean : ErrorCategory::DiagramMismatch;
}

Result<ErrorAggregate, std::string> aggregate(const std::vector<ErrorCategory>& records) {
    if (records.empty()) return std::string("no records to aggregate");
    ErrorAggregate agg;
    agg.total = records.size();
    for (ErrorCategory category : records) {
        switch (category) {
            case ErrorCategory::Clean: ++agg.clean; break;
            case ErrorCategory::SyntaxError: ++agg.syntax; break;
            case ErrorCategory::UmlAbsence: ++agg.absence; break;
            case ErrorCategory::DiagramMismatch: ++agg.mismatch; break;
        }
    }
    return agg;
}

std::string format_rate4(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", rate);
    return buf;
}

double round_rate4(double rate) {
    return std::round(rate * 10000.0) / 10000.0;
}

}  // namespace umlforge
