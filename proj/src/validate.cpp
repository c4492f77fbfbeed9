// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/validate.hpp"

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

namespace umlforge {

namespace {

struct SeqScopeChecker {
    std::vector<Violation>& out;

    // Activations must balance as a per-participant LIFO within each element
    // list; alt branches are independent scopes.
    void check_scope(const SeqBody& body, std::size_t top_index, bool is_top) {
        std::vector<std::pair<std::string, std::size_t>> open;  // target, index
        for (std::size_t i = 0; i < body.size(); ++i) {
            std::size_t idx = is_top ? i : top_index;
            const auto& node = body[i].node;
            if (const auto* act = std::get_if<Activate>(&node)) {
                open.emplace_back(act->target, idx);
            } else if (const auto* deact = std::get_if<Deactivate>(&node)) {
                auto it = std::find_if(open.rbegin(), open.rend(),
                                       [&](const auto& p) { return p.first == deact->target; });
                if (it == open.rend()) {
                    out.push_back({ViolationCode::UnmatchedDeactivation, idx,
                                   "deactivate " + deact->target +
                                       " without a prior activate in scope"});
                } else {
                    open.erase(std::next(it).base());
                }
            } else if (const auto* alt = std::get_if<AltBlock>(&node)) {
                if (alt->branches.empty()) {
                    out.push_back({ViolationCode::EmptyAltBlock, idx,
                                   "alt block has no branches"});
                }
                for (const AltBranch& branch : alt->branches) {
                    check_scope(branch.body, idx, false);
                }
            }
        }
        for (const auto& [target, idx] : open) {
            out.push_back({ViolationCode::UnmatchedActivation, idx,
                           "activate " + target + " without a later deactivate in scope"});
        }
    }
};

struct ActChecker {
    std::vector<Violation>& out;

    // Returns true when every control path through `body` reaches a stop.
    bool check_body(const ActBody& body, std::size_t top_index, bool is_top) {
        bool terminated = false;
        for (std::size_t i = 0; i < body.size(); ++i) {
            std::size_t idx = is_top ? i : top_index;
            if (terminated) {
                out.push_back({ViolationCode::UnreachableElement, idx,
                               "element after all control paths have stopped"});
            }
            const auto& node = body[i].node;
            if (std::holds_alternative<Start>(node)) {
                if (!is_top || i != 0) {
                    out.push_back({ViolationCode::MisplacedStart, idx,
                                   "start may only open the diagram"});
                }
            } else if (std::holds_alternative<Stop>(node)) {
                terminated = true;
            } else if (const auto* decision = std::get_if<Decision>(&node)) {
                bool then_stops = check_body(decision->then_body, idx, false);
                bool else_stops = false;
                if (decision->else_branch) {
                    else_stops = check_body(decision->else_branch->body, idx, false);
                }
                if (decision->else_branch && then_stops && else_stops) terminated = true;
            } else if (const auto* fork = std::get_if<Fork>(&node)) {
                if (fork->branches.size() < 2) {
                    out.push_back({ViolationCode::ForkTooFewBranches, idx,
                                   "fork needs at least two branches"});
                }
                for (const ActBody& branch : fork->branches) {
                    check_body(branch, idx, false);
                }
            }
        }
        return terminated;
    }
};

}  // namespace

const char* to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::UnmatchedActivation: return "UnmatchedActivation";
        case ViolationCode::UnmatchedDeactivation: return "UnmatchedDeactivation";
        case ViolationCode::EmptyAltBlock: return "EmptyAltBlock";
        case ViolationCode::MissingStart: return "MissingStart";
        case ViolationCode::MisplacedStart: return "MisplacedStart";
        case ViolationCode::NonTerminatingPath: return "NonTerminatingPath";
        case ViolationCode::UnreachableElement: return "UnreachableElement";
        case ViolationCode::ForkTooFewBranches: return "ForkTooFewBranches";
    }
    return "unknown";
}

std::vector<Violation> validate(const DiagramAst& ast) {
    std::vector<Violation> out;
    if (ast.kind() == DiagramKind::Sequence) {
        SeqScopeChecker{out}.check_scope(ast.sequence(), 0, true);
        return out;
    }

    const ActBody& body = ast.activity();
    if (body.empty() || !std::holds_alternative<Start>(body.front().node)) {
        out.push_back({ViolationCode::MissingStart, 0,
                       "activity diagram must begin with start"});
    }
    bool terminated = ActChecker{out}.check_body(body, 0, true);
    if (!terminated) {
        out.push_back({ViolationCode::NonTerminatingPath,
                       body.empty() ? 0 : body.size() - 1,
                       "not every control path reaches stop"});
    }
    return out;
}

}  // namespace umlforge
