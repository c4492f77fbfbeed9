// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_VALIDATE_HPP
#define UMLFORGE_VALIDATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "umlforge/ast.hpp"

namespace umlforge {

enum class ViolationCode {
    UnmatchedActivation,    // activate without a later deactivate in scope
    UnmatchedDeactivation,  // deactivate without a prior activate in scope
    EmptyAltBlock,          // alt block with zero branches
    MissingStart,           // activity body does not begin with start
    MisplacedStart,         // start nested inside a block or repeated
    NonTerminatingPath,     // some control path never reaches stop
    UnreachableElement,     // element after all paths have stopped
    ForkTooFewBranches,     // fork with fewer than two branches
};

const char* to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::size_t element_index;  // index of the offending top-level element
    std::string message;
};

/// Checks the structural invariants that the grammar alone cannot enforce.
/// Returns an empty list iff the AST is a well-formed diagram.
std::vector<Violation> validate(const DiagramAst& ast);

}  // namespace umlforge

#endif
