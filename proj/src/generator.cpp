// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/generator.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <vector>

#include "umlforge/rng.hpp"

namespace umlforge {

namespace {

constexpr std::array<std::string_view, 24> kVerbs = {
    "send",    "receive", "validate", "process", "update",  "create",
    "delete",  "fetch",   "store",    "check",   "confirm", "reject",
    "approve", "notify",  "queue",    "log",     "encode",  "parse",
    "route",   "retry",   "cache",    "sync",    "audit",   "dispatch"};

constexpr std::array<std::string_view, 24> kNouns = {
    "request", "response", "token",   "record",   "session", "message",
    "payload", "order",    "report",  "account",  "profile", "invoice",
    "ticket",  "batch",    "event",   "task",     "packet",  "document",
    "receipt", "alert",    "snapshot", "config",  "job",     "entry"};

constexpr std::array<std::string_view, 16> kParticipants = {
    "User",   "Client",    "Server",  "Service", "Gateway", "Database",
    "Cache",  "Auth",      "Api",     "Worker",  "JobQueue", "Logger",
    "Scheduler", "Monitor", "Proxy",  "Broker"};

constexpr std::array<std::string_view, 8> kGuards = {
    "success", "failure", "timeout",       "retry",
    "found",   "missing", "authenticated", "rejected"};

constexpr std::array<std::pair<std::string_view, std::string_view>, 4> kBranchLabels = {
    {{"yes", "no"}, {"ok", "fail"}, {"true", "false"}, {"valid", "invalid"}}};

constexpr std::array<std::string_view, 5> kConditionForms = {
    "%s valid?", "%s found?", "%s ready?", "has %s?", "retry %s?"};

class DiagramBuilder {
public:
    DiagramBuilder(const GenConfig& cfg, Rng rng) : cfg_(cfg), rng_(rng) {
        verb_count_ = std::clamp<std::size_t>(cfg.label_vocabulary_size, 1, kVerbs.size());
        noun_count_ = std::clamp<std::size_t>(cfg.label_vocabulary_size, 1, kNouns.size());
    }

    DiagramAst build() {
        if (cfg_.kind == DiagramKind::Sequence) {
            return DiagramAst::make_sequence(build_sequence());
        }
        return DiagramAst::make_activity(build_activity());
    }

private:
    std::string_view verb() { return kVerbs[rng_.below(verb_count_)]; }
    std::string_view noun() { return kNouns[rng_.below(noun_count_)]; }

    std::string message_label() {
        return std::string(verb()) + " " + std::string(noun());
    }

    std::string action_label() {
        std::string label(verb());
        label[0] = static_cast<char>(label[0] - 'a' + 'A');
        return label + " " + std::string(noun());
    }

    std::string condition() {
        std::string_view form = kConditionForms[rng_.below(kConditionForms.size())];
        std::string n(noun());
        std::string out;
        for (std::size_t i = 0; i < form.size(); ++i) {
            if (form[i] == '%' && i + 1 < form.size() && form[i + 1] == 's') {
                out += n;
                ++i;
            } else {
                out += form[i];
            }
        }
        return out;
    }

    // ---- sequence -----------------------------------------------------

    SeqBody build_sequence() {
        int n = static_cast<int>(
            rng_.between(cfg_.participants_min, cfg_.participants_max));
        std::vector<std::size_t> pool(kParticipants.size());
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
        for (std::size_t i = pool.size() - 1; i > 0; --i) {
            std::swap(pool[i], pool[rng_.below(i + 1)]);
        }
        names_.clear();
        SeqBody body;
        for (int i = 0; i < n; ++i) {
            std::string name(kParticipants[pool[static_cast<std::size_t>(i)]]);
            names_.push_back(name);
            std::optional<std::string> display;
            if (rng_.chance(0.2)) {
                std::string d(noun());
                d[0] = static_cast<char>(d[0] - 'a' + 'A');
                display = d + " " + name;
            }
            body.push_back(SeqElement{ParticipantDecl{std::move(name), std::move(display)}});
        }

        int budget = static_cast<int>(rng_.between(cfg_.messages_min, cfg_.messages_max));
        append_seq_scope(body, budget, 0);
        return body;
    }

    void append_seq_scope(SeqBody& body, int& budget, int depth) {
        std::vector<std::string> open_activations;
        while (budget > 0) {
            if (depth < 2 && budget >= 2 && rng_.chance(cfg_.alt_probability)) {
                AltBlock block;
                std::size_t branch_count = 2 + (rng_.chance(0.25) ? 1 : 0);
                for (std::size_t b = 0; b < branch_count && budget > 0; ++b) {
                    AltBranch branch;
                    branch.guard = std::string(kGuards[rng_.below(kGuards.size())]);
                    int branch_budget =
                        static_cast<int>(rng_.between(1, std::min(budget, 3)));
                    budget -= branch_budget;
                    append_seq_scope(branch.body, branch_budget, depth + 1);
                    block.branches.push_back(std::move(branch));
                }
                if (block.branches.size() < 2) {
                    // Ran out of budget for a second branch; add a minimal one.
                    AltBranch branch;
                    branch.guard = std::string(kGuards[rng_.below(kGuards.size())]);
                    branch.body.push_back(SeqElement{make_message()});
                    block.branches.push_back(std::move(branch));
                }
                body.push_back(SeqElement{std::move(block)});
                continue;
            }

            Message m = make_message();
            std::string target = m.to;
            body.push_back(SeqElement{std::move(m)});
            --budget;
            if (rng_.chance(cfg_.activation_probability)) {
                body.push_back(SeqElement{Activate{target}});
                open_activations.push_back(target);
            }
            if (!open_activations.empty() && rng_.chance(0.4)) {
                body.push_back(SeqElement{Deactivate{open_activations.back()}});
                open_activations.pop_back();
            }
        }
        while (!open_activations.empty()) {
            body.push_back(SeqElement{Deactivate{open_activations.back()}});
            open_activations.pop_back();
        }
    }

    Message make_message() {
        std::size_t from = rng_.below(names_.size());
        std::size_t to = rng_.below(names_.size() - 1);
        if (to >= from) ++to;
        ArrowKind arrow = rng_.chance(0.3) ? ArrowKind::Dashed : ArrowKind::Solid;
        return Message{names_[from], names_[to], arrow, message_label()};
    }

    // ---- activity ------------------------------------------------------

    ActBody build_activity() {
        ActBody body;
        body.push_back(ActElement{Start{}});
        int budget = static_cast<int>(rng_.between(cfg_.actions_min, cfg_.actions_max));
        append_act_scope(body, budget, 0);
        body.push_back(ActElement{Stop{}});
        return body;
    }

    void append_act_scope(ActBody& body, int& budget, int depth) {
        while (budget > 0) {
            if (depth < 2 && budget >= 2 && rng_.chance(cfg_.decision_probability)) {
                Decision d;
                d.condition = condition();
                auto labels = kBranchLabels[rng_.below(kBranchLabels.size())];
                d.then_label = std::string(labels.first);
                int then_budget = static_cast<int>(rng_.between(1, std::min(budget, 3)));
                budget -= then_budget;
                append_act_scope(d.then_body, then_budget, depth + 1);
                if (budget > 0 && rng_.chance(0.6)) {
                    DecisionElse else_branch;
                    else_branch.label = std::string(labels.second);
                    int else_budget =
                        static_cast<int>(rng_.between(1, std::min(budget, 3)));
                    budget -= else_budget;
                    append_act_scope(else_branch.body, else_budget, depth + 1);
                    d.else_branch = std::move(else_branch);
                }
                body.push_back(ActElement{std::move(d)});
                continue;
            }
            if (depth < 2 && budget >= 2 && rng_.chance(cfg_.fork_probability)) {
                Fork fork;
                std::size_t branch_count = 2 + (rng_.chance(0.3) ? 1 : 0);
                for (std::size_t b = 0; b < branch_count; ++b) {
                    ActBody branch;
                    // Budget may run dry mid-fork; a branch still needs a body.
                    int branch_budget = budget > 0
                        ? static_cast<int>(rng_.between(1, std::min(budget, 2)))
                        : 1;
                    budget -= branch_budget;
                    append_act_scope(branch, branch_budget, depth + 1);
                    fork.branches.push_back(std::move(branch));
                }
                body.push_back(ActElement{std::move(fork)});
                continue;
            }
            body.push_back(ActElement{Action{action_label()}});
            --budget;
        }
    }

    GenConfig cfg_;
    Rng rng_;
    std::size_t verb_count_;
    std::size_t noun_count_;
    std::vector<std::string> names_;
};

}  // namespace

const char* to_string(SizeClass size_class) {
    switch (size_class) {
        case SizeClass::Small: return "small";
        case SizeClass::Medium: return "medium";
        case SizeClass::Large: return "large";
        case SizeClass::ExtraLarge: return "xlarge";
    }
    return "unknown";
}

bool size_class_from_string(std::string_view name, SizeClass& out) {
    if (name == "small") out = SizeClass::Small;
    else if (name == "medium") out = SizeClass::Medium;
    else if (name == "large") out = SizeClass::Large;
    else if (name == "xlarge") out = SizeClass::ExtraLarge;
    else return false;
    return true;
}

std::uint64_t size_class_target(SizeClass size_class) {
    switch (size_class) {
        case SizeClass::Small: return 7'500;
        case SizeClass::Medium: return 15'000;
        case SizeClass::Large: return 30'000;
        case SizeClass::ExtraLarge: return 150'000;
    }
    return 0;
}

std::string GenConfig::check() const {
    if (participants_min < 1 || participants_min > participants_max) {
        return "participant range is empty";
    }
    if (messages_min < 1 || messages_min > messages_max) return "message range is empty";
    if (actions_min < 1 || actions_min > actions_max) return "action range is empty";
    for (double p : {alt_probability, activation_probability, decision_probability,
                     fork_probability}) {
        if (p < 0.0 || p > 1.0) return "probability outside [0, 1]";
    }
    if (label_vocabulary_size < 1) return "label vocabulary is empty";
    if (participants_max > static_cast<int>(kParticipants.size())) {
        return "participant range exceeds the name pool";
    }
    return {};
}

DiagramAst gen_ast(const GenConfig& config, std::uint64_t index) {
    return DiagramBuilder(config, Rng(mix_seed(config.seed, index))).build();
}

}  // namespace umlforge
