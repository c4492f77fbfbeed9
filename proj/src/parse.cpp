// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umlforge {

namespace {

// Statement heads (participant, activate, alt, else, start, ...) are reserved:
// a participant cannot be named after one. The generator's vocabulary never
// collides with them.

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

std::string_view first_word(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    return s.substr(0, i);
}

std::string_view after_word(std::string_view s) {
    std::string_view w = first_word(s);
    return trim(s.substr(w.size()));
}

enum class StmtKind {
    Participant,
    Message,
    Activate,
    Deactivate,
    Alt,
    Else,  // shared by alt blocks and decisions; resolved by context
    End,
    Start,
    Stop,
    Action,
    If,
    EndIf,
    Fork,
    ForkAgain,
    EndFork,
};

struct Stmt {
    StmtKind kind;
    int line;
    // Payload fields; which ones are set depends on kind.
    std::string a;  // participant name / message from / action label / condition / else remainder / alt guard
    std::string b;  // display name / message to / then label
    std::string c;  // message label
    ArrowKind arrow = ArrowKind::Solid;
};

struct Located {
    int line;
    std::string_view text;
};

ParseError err(ParseErrorCode code, int line, std::string message) {
    return ParseError{code, line, 1, std::move(message)};
}

// Sequence-side statements count one way, activity-side the other; `else` is
// neutral and resolved by the enclosing block.
enum class Side { Neutral, Sequence, Activity };

Side side_of(StmtKind k) {
    switch (k) {
        case StmtKind::Participant:
        case StmtKind::Message:
        case StmtKind::Activate:
        case StmtKind::Deactivate:
        case StmtKind::Alt:
        case StmtKind::End:
            return Side::Sequence;
        case StmtKind::Start:
        case StmtKind::Stop:
        case StmtKind::Action:
        case StmtKind::If:
        case StmtKind::EndIf:
        case StmtKind::Fork:
        case StmtKind::ForkAgain:
        case StmtKind::EndFork:
            return Side::Activity;
        case StmtKind::Else:
            return Side::Neutral;
    }
    return Side::Neutral;
}

Result<Stmt, ParseError> lex_statement(const Located& loc) {
    const std::string_view line = loc.text;
    const int ln = loc.line;
    const std::string_view head = first_word(line);

    if (line == "start") return Stmt{StmtKind::Start, ln};
    if (line == "stop") return Stmt{StmtKind::Stop, ln};
    if (line == "endif") return Stmt{StmtKind::EndIf, ln};
    if (line == "fork") return Stmt{StmtKind::Fork, ln};
    if (line == "fork again") return Stmt{StmtKind::ForkAgain, ln};
    if (line == "end fork") return Stmt{StmtKind::EndFork, ln};
    if (line == "end") return Stmt{StmtKind::End, ln};

    if (line.front() == ':') {
        if (line.size() < 2 || line.back() != ';') {
            return err(ParseErrorCode::UnknownStatement, ln,
                       "action label must end with ';'");
        }
        Stmt s{StmtKind::Action, ln};
        s.a = std::string(trim(line.substr(1, line.size() - 2)));
        return s;
    }

    if (head == "if") {
        std::string_view rest = after_word(line);
        std::size_t sep = rest.rfind(") then (");
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')' ||
            sep == std::string_view::npos) {
            return err(ParseErrorCode::UnknownStatement, ln,
                       "expected 'if (condition) then (label)'");
        }
        Stmt s{StmtKind::If, ln};
        s.a = std::string(rest.substr(1, sep - 1));
        s.b = std::string(rest.substr(sep + 8, rest.size() - sep - 9));
        return s;
    }

    if (head == "else") {
        Stmt s{StmtKind::Else, ln};
        s.a = std::string(after_word(line));
        return s;
    }

    if (head == "alt") {
        Stmt s{StmtKind::Alt, ln};
        s.a = std::string(after_word(line));
        return s;
    }

    if (head == "participant") {
        std::string_view rest = after_word(line);
        Stmt s{StmtKind::Participant, ln};
        if (!rest.empty() && rest.front() == '"') {
            std::size_t close = rest.find('"', 1);
            if (close == std::string_view::npos) {
                return err(ParseErrorCode::UnknownStatement, ln,
                           "unterminated participant display name");
            }
            s.b = std::string(rest.substr(1, close - 1));
            std::string_view tail = trim(rest.substr(close + 1));
            if (first_word(tail) != "as" || !is_identifier(after_word(tail))) {
                return err(ParseErrorCode::UnknownStatement, ln,
                           "expected 'participant \"display\" as Name'");
            }
            s.a = std::string(after_word(tail));
            return s;
        }
        if (!is_identifier(rest)) {
            return err(ParseErrorCode::UnknownStatement, ln,
                       "participant name must be an identifier");
        }
        s.a = std::string(rest);
        return s;
    }

    if (head == "activate" || head == "deactivate") {
        std::string_view rest = after_word(line);
        if (!is_identifier(rest)) {
            return err(ParseErrorCode::UnknownStatement, ln,
                       std::string(head) + " target must be an identifier");
        }
        Stmt s{head == "activate" ? StmtKind::Activate : StmtKind::Deactivate, ln};
        s.a = std::string(rest);
        return s;
    }

    // Message: FROM -> TO [: label] or FROM --> TO [: label]
    std::size_t arrow = line.find("->");
    if (arrow != std::string_view::npos) {
        bool dashed = arrow > 0 && line[arrow - 1] == '-';
        std::size_t arrow_begin = dashed ? arrow - 1 : arrow;
        std::string_view from = trim(line.substr(0, arrow_begin));
        std::string_view rest = line.substr(arrow + 2);
        std::string_view to = rest;
        std::string_view label;
        std::size_t colon = rest.find(':');
        if (colon != std::string_view::npos) {
            to = rest.substr(0, colon);
            label = trim(rest.substr(colon + 1));
        }
        to = trim(to);
        if (!is_identifier(from) || !is_identifier(to)) {
            return err(ParseErrorCode::UnknownStatement, ln,
                       "message endpoints must be identifiers");
        }
        Stmt s{StmtKind::Message, ln};
        s.a = std::string(from);
        s.b = std::string(to);
        s.c = std::string(label);
        s.arrow = dashed ? ArrowKind::Dashed : ArrowKind::Solid;
        return s;
    }

    return err(ParseErrorCode::UnknownStatement, ln,
               "unknown statement: '" + std::string(line) + "'");
}

// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(std::vector<Stmt> stmts, const ParseOptions& options)
        : stmts_(std::move(stmts)), options_(options) {}

    Result<DiagramAst, ParseError> run(Side side) {
        if (side == Side::Activity) {
            auto body = parse_act_body();
            if (!body) return body.error();
            if (auto stop = expect_consumed()) return *stop;
            return DiagramAst::make_activity(std::move(body).value());
        }
        auto body = parse_seq_body();
        if (!body) return body.error();
        if (auto stop = expect_consumed()) return *stop;
        return DiagramAst::make_sequence(std::move(body).value());
    }

private:
    bool done() const { return pos_ >= stmts_.size(); }
    const Stmt& cur() const { return stmts_[pos_]; }

    std::optional<ParseError> expect_consumed() {
        if (done()) return std::nullopt;
        return err(ParseErrorCode::UnbalancedBlock, cur().line,
                   "closing statement without an open block");
    }

    std::optional<ParseError> check_declared(const std::string& name, int line) {
        if (options_.auto_declare_participants) return std::nullopt;
        for (const std::string& d : declared_) {
            if (d == name) return std::nullopt;
        }
        return err(ParseErrorCode::UndeclaredParticipant, line,
                   "participant '" + name + "' used before declaration");
    }

    // Stops (without consuming) at Else/End so alt parsing can take over.
    Result<SeqBody, ParseError> parse_seq_body() {
        SeqBody body;
        while (!done()) {
            const Stmt& s = cur();
            switch (s.kind) {
                case StmtKind::Participant: {
                    declared_.push_back(s.a);
                    ParticipantDecl decl{s.a, s.b.empty()
                                                  ? std::nullopt
                                                  : std::optional<std::string>(s.b)};
                    body.push_back(SeqElement{std::move(decl)});
                    ++pos_;
                    break;
                }
                case StmtKind::Message: {
                    if (auto e = check_declared(s.a, s.line)) return *e;
                    if (auto e = check_declared(s.b, s.line)) return *e;
                    body.push_back(SeqElement{Message{s.a, s.b, s.arrow, s.c}});
                    ++pos_;
                    break;
                }
                case StmtKind::Activate:
                case StmtKind::Deactivate: {
                    if (auto e = check_declared(s.a, s.line)) return *e;
                    if (s.kind == StmtKind::Activate) {
                        body.push_back(SeqElement{Activate{s.a}});
                    } else {
                        body.push_back(SeqElement{Deactivate{s.a}});
                    }
                    ++pos_;
                    break;
                }
                case StmtKind::Alt: {
                    auto block = parse_alt_block();
                    if (!block) return block.error();
                    body.push_back(SeqElement{std::move(block).value()});
                    break;
                }
                case StmtKind::Else:
                case StmtKind::End:
                    return body;
                default:
                    // Mixed kinds are rejected before parsing begins.
                    return err(ParseErrorCode::MixedDiagramKinds, s.line,
                               "activity statement in a sequence diagram");
            }
        }
        return body;
    }

    Result<AltBlock, ParseError> parse_alt_block() {
        const int open_line = cur().line;
        AltBlock block;
        std::string guard = cur().a;
        ++pos_;  // consume 'alt'
        for (;;) {
            auto branch_body = parse_seq_body();
            if (!branch_body) return branch_body.error();
            block.branches.push_back(AltBranch{guard, std::move(branch_body).value()});
            if (done()) {
                return err(ParseErrorCode::UnbalancedBlock, open_line,
                           "alt block is never closed with 'end'");
            }
            if (cur().kind == StmtKind::End) {
                ++pos_;
                return block;
            }
            guard = cur().a;  // 'else'
            ++pos_;
        }
    }

    // Stops (without consuming) at Else/EndIf/ForkAgain/EndFork.
    Result<ActBody, ParseError> parse_act_body() {
        ActBody body;
        while (!done()) {
            const Stmt& s = cur();
            switch (s.kind) {
                case StmtKind::Start:
                    body.push_back(ActElement{Start{}});
                    ++pos_;
                    break;
                case StmtKind::Stop:
                    body.push_back(ActElement{Stop{}});
                    ++pos_;
                    break;
                case StmtKind::Action:
                    body.push_back(ActElement{Action{s.a}});
                    ++pos_;
                    break;
                case StmtKind::If: {
                    auto decision = parse_decision();
                    if (!decision) return decision.error();
                    body.push_back(ActElement{std::move(decision).value()});
                    break;
                }
                case StmtKind::Fork: {
                    auto fork = parse_fork();
                    if (!fork) return fork.error();
                    body.push_back(ActElement{std::move(fork).value()});
                    break;
                }
                case StmtKind::Else:
                case StmtKind::EndIf:
                case StmtKind::ForkAgain:
                case StmtKind::EndFork:
                    return body;
                default:
                    return err(ParseErrorCode::MixedDiagramKinds, s.line,
                               "sequence statement in an activity diagram");
            }
        }
        return body;
    }

    Result<Decision, ParseError> parse_decision() {
        const int open_line = cur().line;
        Decision decision;
        decision.condition = cur().a;
        decision.then_label = cur().b;
        ++pos_;  // consume 'if'
        auto then_body = parse_act_body();
        if (!then_body) return then_body.error();
        decision.then_body = std::move(then_body).value();
        if (done()) {
            return err(ParseErrorCode::UnbalancedBlock, open_line,
                       "if block is never closed with 'endif'");
        }
        if (cur().kind == StmtKind::Else) {
            const Stmt& e = cur();
            std::string_view rem = e.a;
            if (rem.size() < 2 || rem.front() != '(' || rem.back() != ')') {
                return err(ParseErrorCode::UnknownStatement, e.line,
                           "expected 'else (label)'");
            }
            DecisionElse else_branch;
            else_branch.label = std::string(rem.substr(1, rem.size() - 2));
            ++pos_;
            auto else_body = parse_act_body();
            if (!else_body) return else_body.error();
            else_branch.body = std::move(else_body).value();
            decision.else_branch = std::move(else_branch);
        }
        if (done() || cur().kind != StmtKind::EndIf) {
            return err(ParseErrorCode::UnbalancedBlock,
                       done() ? open_line : cur().line,
                       "if block is never closed with 'endif'");
        }
        ++pos_;
        return decision;
    }

    Result<Fork, ParseError> parse_fork() {
        const int open_line = cur().line;
        Fork fork;
        ++pos_;  // consume 'fork'
        for (;;) {
            auto branch = parse_act_body();
            if (!branch) return branch.error();
            fork.branches.push_back(std::move(branch).value());
            if (done()) {
                return err(ParseErrorCode::UnbalancedBlock, open_line,
                           "fork block is never closed with 'end fork'");
            }
            if (cur().kind == StmtKind::EndFork) {
                ++pos_;
                return fork;
            }
            if (cur().kind != StmtKind::ForkAgain) {
                return err(ParseErrorCode::UnbalancedBlock, cur().line,
                           "unexpected statement inside fork block");
            }
            ++pos_;
        }
    }

    std::vector<Stmt> stmts_;
    ParseOptions options_;
    std::size_t pos_ = 0;
    std::vector<std::string> declared_;
};

}  // namespace

const char* to_string(ParseErrorCode code) {
    switch (code) {
        case ParseErrorCode::MissingStartTag: return "MissingStartTag";
        case ParseErrorCode::MissingEndTag: return "MissingEndTag";
        case ParseErrorCode::UnknownStatement: return "UnknownStatement";
        case ParseErrorCode::UnbalancedBlock: return "UnbalancedBlock";
        case ParseErrorCode::UndeclaredParticipant: return "UndeclaredParticipant";
        case ParseErrorCode::MixedDiagramKinds: return "MixedDiagramKinds";
        case ParseErrorCode::ValidationFailed: return "ValidationFailed";
    }
    return "unknown";
}

Result<DiagramAst, ParseError> parse(std::string_view source,
                                     const ParseOptions& options) {
    // Split into trimmed, non-blank lines with their 1-based line numbers.
    std::vector<Located> lines;
    {
        int line_no = 1;
        std::size_t begin = 0;
        while (begin <= source.size()) {
            std::size_t end = source.find('\n', begin);
            if (end == std::string_view::npos) end = source.size();
            std::string_view raw = trim(source.substr(begin, end - begin));
            if (!raw.empty()) lines.push_back(Located{line_no, raw});
            begin = end + 1;
            ++line_no;
        }
    }

    auto word_is = [](std::string_view line, std::string_view tag) {
        return line == tag || (line.size() > tag.size() && line.substr(0, tag.size()) == tag &&
                               line[tag.size()] == ' ');
    };

    if (lines.empty() || !word_is(lines.front().text, "@startuml")) {
        return err(ParseErrorCode::MissingStartTag,
                   lines.empty() ? 1 : lines.front().line,
                   "source must begin with @startuml");
    }

    std::vector<Stmt> stmts;
    bool closed = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (word_is(lines[i].text, "@enduml")) {
            if (i + 1 < lines.size()) {
                return err(ParseErrorCode::UnknownStatement, lines[i + 1].line,
                           "content after @enduml");
            }
            closed = true;
            break;
        }
        auto stmt = lex_statement(lines[i]);
        if (!stmt) return stmt.error();
        stmts.push_back(std::move(stmt).value());
    }
    if (!closed) {
        return err(ParseErrorCode::MissingEndTag, lines.back().line,
                   "source must end with @enduml");
    }

    // Decide the diagram kind from the first side-specific statement and
    // reject mixtures before structural parsing.
    Side side = Side::Neutral;
    for (const Stmt& s : stmts) {
        Side stmt_side = side_of(s.kind);
        if (stmt_side == Side::Neutral) continue;
        if (side == Side::Neutral) {
            side = stmt_side;
        } else if (side != stmt_side) {
            return err(ParseErrorCode::MixedDiagramKinds, s.line,
                       "sequence and activity statements in one diagram");
        }
    }
    if (side == Side::Neutral && !stmts.empty()) {
        // Only neutral statements (stray 'else'): report against structure.
        return err(ParseErrorCode::UnbalancedBlock, stmts.front().line,
                   "closing statement without an open block");
    }
    // An empty body defaults to an (empty) sequence diagram.
    return Parser(std::move(stmts), options).run(side);
}

}  // namespace umlforge
