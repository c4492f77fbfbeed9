// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_DETECT_HPP
#define UMLFORGE_DETECT_HPP

#include <optional>
#include <string>
#include <string_view>

namespace umlforge {

enum class DiagramKindGuess { Sequence, Activity, OtherUml, NotUml };

const char* to_string(DiagramKindGuess guess);

/// Deterministic diagram-type classification of arbitrary text.
///
/// Rules, applied in order:
///   1. no "@startuml" anywhere                  -> NotUml
///   2. any construct of a UML dialect outside
///      the supported subset (class, state, ...) -> OtherUml
///   3. majority of sequence vs activity markers -> Sequence / Activity
///   4. nonzero tie                              -> OtherUml
///   5. no markers at all                        -> NotUml
DiagramKindGuess detect_kind(std::string_view text);

/// Returns the first "@startuml"..."@enduml" span of a raw model response,
/// including both delimiters, or nullopt when no complete span exists. The
/// returned text is always a verbatim substring of the input.
std::optional<std::string> extract_uml_block(std::string_view response);

}  // namespace umlforge

#endif
