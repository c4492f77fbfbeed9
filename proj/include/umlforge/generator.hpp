// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_GENERATOR_HPP
#define UMLFORGE_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "umlforge/ast.hpp"

namespace umlforge {

enum class SizeClass { Small, Medium, Large, ExtraLarge };

const char* to_string(SizeClass size_class);
bool size_class_from_string(std::string_view name, SizeClass& out);

/// Total corpus target (train + test) for a size class.
std::uint64_t size_class_target(SizeClass size_class);

/// Knobs for seeded diagram generation. Defaults give diverse desk-scale
/// corpora; every field participates in determinism.
struct GenConfig {
    std::uint64_t seed = 0;
    DiagramKind kind = DiagramKind::Sequence;
    SizeClass size_class = SizeClass::Small;

    // Sequence diagrams.
    int participants_min = 2;
    int participants_max = 6;
    int messages_min = 3;
    int messages_max = 12;
    double alt_probability = 0.20;
    double activation_probability = 0.35;

    // Activity diagrams.
    int actions_min = 3;
    int actions_max = 10;
    double decision_probability = 0.35;
    double fork_probability = 0.15;

    /// How many verbs/nouns of the built-in word lists are in play.
    int label_vocabulary_size = 20;

    /// Empty iff the config is usable: non-empty ranges, probabilities in [0,1].
    std::string check() const;
};

/// Draws the index-th diagram of the stream identified by config.seed.
/// Deterministic: the same (config, index) always yields the same AST, and the
/// result always passes validate().
DiagramAst gen_ast(const GenConfig& config, std::uint64_t index);

}  // namespace umlforge

#endif
