// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/detect.hpp"

#include <array>
#include <string_view>

namespace umlforge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string_view first_word(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '(') ++i;
    return s.substr(0, i);
}

// UML constructs PlantUML understands but this subset does not; any of these
// marks a response as a recognizable diagram of another type.
constexpr std::array<std::string_view, 16> kForeignHeads = {
    "class",     "interface", "enum",    "abstract", "object",  "state",
    "usecase",   "actor",     "entity",  "component", "package", "node",
    "database",  "boundary",  "control", "collections",
};

bool is_foreign(std::string_view line) {
    std::string_view head = first_word(line);
    for (std::string_view keyword : kForeignHeads) {
        if (head == keyword) return true;
    }
    return false;
}

bool is_activity_marker(std::string_view line) {
    if (line == "start" || line == "stop" || line == "endif" || line == "fork" ||
        line == "fork again" || line == "end fork") {
        return true;
    }
    if (line.size() >= 2 && line.front() == ':' && line.back() == ';') return true;
    if (line.substr(0, 3) == "if(" || line.substr(0, 4) == "if (") return true;
    return false;
}

bool is_sequence_marker(std::string_view line) {
    std::string_view head = first_word(line);
    if (head == "participant" || head == "activate" || head == "deactivate" ||
        head == "alt") {
        return true;
    }
    return line.find("->") != std::string_view::npos;
}

}  // namespace

const char* to_string(DiagramKindGuess guess) {
    switch (guess) {
        case DiagramKindGuess::Sequence: return "sequence";
        case DiagramKindGuess::Activity: return "activity";
        case DiagramKindGuess::OtherUml: return "other-uml";
        case DiagramKindGuess::NotUml: return "not-uml";
    }
    return "unknown";
}

DiagramKindGuess detect_kind(std::string_view text) {
    std::size_t begin = text.find("@startuml");
    if (begin == std::string_view::npos) return DiagramKindGuess::NotUml;
    begin += 9;
    std::size_t end = text.find("@enduml", begin);
    std::string_view region =
        text.substr(begin, end == std::string_view::npos ? text.size() - begin
                                                         : end - begin);

    int sequence_count = 0;
    int activity_count = 0;
    std::size_t pos = 0;
    while (pos <= region.size()) {
        std::size_t eol = region.find('\n', pos);
        if (eol == std::string_view::npos) eol = region.size();
        std::string_view line = trim(region.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty()) continue;
        if (is_foreign(line)) return DiagramKindGuess::OtherUml;
        if (is_activity_marker(line)) {
            ++activity_count;
        } else if (is_sequence_marker(line)) {
            ++sequence_count;
        }
    }

    if (sequence_count == 0 && activity_count == 0) return DiagramKindGuess::NotUml;
    if (sequence_count > activity_count) return DiagramKindGuess::Sequence;
    if (activity_count > sequence_count) return DiagramKindGuess::Activity;
    return DiagramKindGuess::OtherUml;
}

std::optional<std::string> extract_uml_block(std::string_view response) {
    std::size_t begin = response.find("@startuml");
    if (begin == std::string_view::npos) return std::nullopt;
    std::size_t end = response.find("@enduml", begin + 9);
    if (end == std::string_view::npos) return std::nullopt;
    return std::string(response.substr(begin, end + 7 - begin));
}

}  // namespace umlforge
