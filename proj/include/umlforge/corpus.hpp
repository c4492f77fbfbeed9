// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_CORPUS_HPP
#define UMLFORGE_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "umlforge/ast.hpp"
#include "umlforge/generator.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

/// Prompt paired with every dataset entry (training and test alike).
inline constexpr std::string_view kDatasetPrompt =
    "<image>\n Generate the most likely UML code from the diagram.";

struct DatasetEntry {
    std::string id;          // first 16 hex chars of sha256(code)
    std::string code;        // canonical source
    std::string image_path;  // relative to the corpus root, "images/<id>.png"
    std::string prompt;      // kDatasetPrompt
    DiagramAst ast;
};

struct CorpusManifest {
    GenConfig config;
    std::uint64_t requested_total = 0;
    std::uint64_t emitted_total = 0;
    std::uint64_t duplicates_dropped = 0;
    bool budget_exhausted = false;
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
};

struct Corpus {
    CorpusManifest manifest;
    std::vector<DatasetEntry> entries;  // in draw order

    const DatasetEntry* find(std::string_view id) const;
};

/// Draws seeded diagrams until `target_total` unique canonical sources exist
/// or a draw budget of 10x the target is exhausted (duplicates are dropped,
/// not re-rolled). The manifest records the 80/20 split.
Result<Corpus, std::string> build_corpus(const GenConfig& config,
                                         std::uint64_t target_total);

/// Deterministic seed-keyed shuffle followed by a round(ratio*N) cut.
/// Returned lists partition `ids`.
std::pair<std::vector<std::string>, std::vector<std::string>> split_corpus(
    const std::vector<std::string>& ids, std::uint64_t seed, double ratio = 0.8);

struct EmitError {
    std::string missing_id;  // set for missing-image failures
    std::string message;
};

/// Training-file bytes: a JSON array of {id, image, conversations} objects.
/// Fails with the offending id when an entry's image is not on disk.
Result<std::string, EmitError> training_json(const std::filesystem::path& corpus_root,
                                             const Corpus& corpus);

/// Test-file bytes: a JSON array of {id, image, question, answer} objects,
/// ordered exactly like the manifest's test_ids.
Result<std::string, EmitError> test_json(const std::filesystem::path& corpus_root,
                                         const Corpus& corpus);

enum class FineTuneStrategy { Full, LoRA };

/// Hyperparameter file consumed by an external trainer.
nlohmann::ordered_json training_config(FineTuneStrategy strategy);

nlohmann::ordered_json manifest_json(const CorpusManifest& manifest);
Result<CorpusManifest, std::string> manifest_from_json(const nlohmann::json& j);

/// Serializes with 2-space indentation and a trailing newline; the byte-stable
/// form used for every emitted JSON file.
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace umlforge

#endif
