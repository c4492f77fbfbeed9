// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_AST_HPP
#define UMLFORGE_AST_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace umlforge {

enum class DiagramKind { Sequence, Activity };

const char* to_string(DiagramKind kind);

// ---------------------------------------------------------------------------
// Sequence diagram elements
// ---------------------------------------------------------------------------

enum class ArrowKind { Solid, Dashed };  // "->" and "-->"

struct ParticipantDecl {
    std::string name;
    std::optional<std::string> display;  // participant "display" as name

    bool operator==(const ParticipantDecl&) const = default;
};

struct Message {
    std::string from;
    std::string to;
    ArrowKind arrow = ArrowKind::Solid;
    std::string label;  // empty means no ": label" suffix

    bool operator==(const Message&) const = default;
};

struct Activate {
    std::string target;
    bool operator==(const Activate&) const = default;
};

struct Deactivate {
    std::string target;
    bool operator==(const Deactivate&) const = default;
};

struct SeqElement;

struct AltBranch {
    std::string guard;
    std::vector<SeqElement> body;

    bool operator==(const AltBranch&) const = default;
};

/// alt/else/end block; at least one branch.
struct AltBlock {
    std::vector<AltBranch> branches;

    bool operator==(const AltBlock&) const = default;
};

struct SeqElement {
    std::variant<ParticipantDecl, Message, Activate, Deactivate, AltBlock> node;

    bool operator==(const SeqElement&) const = default;
};

// ---------------------------------------------------------------------------
// Activity diagram elements
// ---------------------------------------------------------------------------

struct Start {
    bool operator==(const Start&) const = default;
};

struct Stop {
    bool operator==(const Stop&) const = default;
};

struct Action {
    std::string label;  // printed as ":label;"
    bool operator==(const Action&) const = default;
};

struct ActElement;

struct DecisionElse {
    std::string label;
    std::vector<ActElement> body;

    bool operator==(const DecisionElse&) const = default;
};

/// if (condition) then (thenLabel) ... [else (label) ...] endif
struct Decision {
    std::string condition;
    std::string then_label;
    std::vector<ActElement> then_body;
    std::optional<DecisionElse> else_branch;

    bool operator==(const Decision&) const = default;
};

/// fork / fork again / end fork; at least two branches in a valid diagram.
struct Fork {
    std::vector<std::vector<ActElement>> branches;

    bool operator==(const Fork&) const = default;
};

struct ActElement {
    std::variant<Start, Stop, Action, Decision, Fork> node;

    bool operator==(const ActElement&) const = default;
};

// ---------------------------------------------------------------------------
// Diagram
// ---------------------------------------------------------------------------

using SeqBody = std::vector<SeqElement>;
using ActBody = std::vector<ActElement>;

/// One parsed diagram. The body variant enforces that sequence and activity
/// elements never mix inside a single AST.
struct DiagramAst {
    std::variant<SeqBody, ActBody> body;

    DiagramKind kind() const {
        return body.index() == 0 ? DiagramKind::Sequence : DiagramKind::Activity;
    }
    const SeqBody& sequence() const { return std::get<SeqBody>(body); }
    const ActBody& activity() const { return std::get<ActBody>(body); }

    static DiagramAst make_sequence(SeqBody b) { return DiagramAst{std::move(b)}; }
    static DiagramAst make_activity(ActBody b) { return DiagramAst{std::move(b)}; }

    bool operator==(const DiagramAst&) const = default;
};

/// Canonical source form: one statement per line, two-space indent per block
/// depth, LF line endings, newline-terminated, wrapped in @startuml/@enduml.
std::string print(const DiagramAst& ast);

}  // namespace umlforge

#endif
