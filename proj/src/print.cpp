// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <variant>

#include "umlforge/ast.hpp"

namespace umlforge {

namespace {

void indent(std::string& out, int depth) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

void print_seq_body(std::string& out, const SeqBody& body, int depth);
void print_act_body(std::string& out, const ActBody& body, int depth);

struct SeqPrinter {
    std::string& out;
    int depth;

    void operator()(const ParticipantDecl& p) const {
        indent(out, depth);
        if (p.display) {
            out += "participant \"" + *p.display + "\" as " + p.name + "\n";
        } else {
            out += "participant " + p.name + "\n";
        }
    }
    void operator()(const Message& m) const {
        indent(out, depth);
        out += m.from + (m.arrow == ArrowKind::Solid ? " -> " : " --> ") + m.to;
        if (!m.label.empty()) out += " : " + m.label;
        out += "\n";
    }
    void operator()(const Activate& a) const {
        indent(out, depth);
        out += "activate " + a.target + "\n";
    }
    void operator()(const Deactivate& d) const {
        indent(out, depth);
        out += "deactivate " + d.target + "\n";
    }
    void operator()(const AltBlock& alt) const {
        for (std::size_t i = 0; i < alt.branches.size(); ++i) {
            const AltBranch& branch = alt.branches[i];
            indent(out, depth);
            out += (i == 0 ? "alt" : "else");
            if (!branch.guard.empty()) out += " " + branch.guard;
            out += "\n";
            print_seq_body(out, branch.body, depth + 1);
        }
        indent(out, depth);
        out += "end\n";
    }
};

struct ActPrinter {
    std::string& out;
    int depth;

    void operator()(const Start&) const {
        indent(out, depth);
        out += "start\n";
    }
    void operator()(const Stop&) const {
        indent(out, depth);
        out += "stop\n";
    }
    void operator()(const Action& a) const {
        indent(out, depth);
        out += ":" + a.label + ";\n";
    }
    void operator()(const Decision& d) const {
        indent(out, depth);
        out += "if (" + d.condition + ") then (" + d.then_label + ")\n";
        print_act_body(out, d.then_body, depth + 1);
        if (d.else_branch) {
            indent(out, depth);
            out += "else (" + d.else_branch->label + ")\n";
            print_act_body(out, d.else_branch->body, depth + 1);
        }
        indent(out, depth);
        out += "endif\n";
    }
    void operator()(const Fork& f) const {
        for (std::size_t i = 0; i < f.branches.size(); ++i) {
            indent(out, depth);
            out += (i == 0 ? "fork\n" : "fork again\n");
            print_act_body(out, f.branches[i], depth + 1);
        }
        indent(out, depth);
        out += "end fork\n";
    }
};

void print_seq_body(std::string& out, const SeqBody& body, int depth) {
    for (const SeqElement& el : body) std::visit(SeqPrinter{out, depth}, el.node);
}

void print_act_body(std::string& out, const ActBody& body, int depth) {
    for (const ActElement& el : body) std::visit(ActPrinter{out, depth}, el.node);
}

}  // namespace

const char* to_string(DiagramKind kind) {
    return kind == DiagramKind::Sequence ? "sequence" : "activity";
}

std::string print(const DiagramAst& ast) {
    std::string out = "@startuml\n";
    if (ast.kind() == DiagramKind::Sequence) {
        print_seq_body(out, ast.sequence(), 0);
    } else {
        print_act_body(out, ast.activity(), 0);
    }
    out += "@enduml\n";
    return out;
}

}  // namespace umlforge
