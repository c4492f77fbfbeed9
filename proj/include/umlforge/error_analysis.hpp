// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_ERROR_ANALYSIS_HPP
#define UMLFORGE_ERROR_ANALYSIS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "umlforge/ast.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

enum class ErrorCategory { Clean, SyntaxError, UmlAbsence, DiagramMismatch };

const char* to_string(ErrorCategory category);

/// Buckets a raw model response into exactly one category:
///   1. no extractable @startuml/@enduml block        -> UmlAbsence
///   2. block holds recognizable foreign UML (class,
///      state, ...); a real renderer would draw it,
///      just not the requested kind                   -> DiagramMismatch
///   3. block fails to parse/validate/render          -> SyntaxError
///   4. block renders but detects as the wrong kind   -> DiagramMismatch
///   5. otherwise                                     -> Clean
ErrorCategory classify(std::string_view response, DiagramKind expected);

struct ErrorAggregate {
    std::size_t total = 0;
    std::size_t clean = 0;
    std::size_t syntax = 0;
    std::size_t absence = 0;
    std::size_t mismatch = 0;

    double syntax_rate() const { return static_cast<double>(syntax) / static_cast<double>(total); }
    double absence_rate() const { return static_cast<double>(absence) / static_cast<double>(total); }
    double mismatch_rate() const { return static_cast<double>(mismatch) / static_cast<double>(total); }
};

Result<ErrorAggregate, std::string> aggregate(const std::vector<ErrorCategory>& records);

/// Fixed-point rendering at the four-decimal precision used in reports
/// (1/1500 prints as "0.0007").
std::string format_rate4(double rate);

/// The same rounding applied to the numeric value stored in report files.
double round_rate4(double rate);

}  // namespace umlforge

#endif
