// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/corpus.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "umlforge/rng.hpp"
#include "umlforge/sha256.hpp"

namespace umlforge {

namespace {

using ordered_json = nlohmann::ordered_json;

// Salt so the split shuffle is independent of the generation stream.
constexpr std::uint64_t kSplitSalt = 0x73706C6974ULL;  // "split"

ordered_json config_json(const GenConfig& c) {
    ordered_json j;
    j["seed"] = c.seed;
    j["kind"] = to_string(c.kind);
    j["size_class"] = to_string(c.size_class);
    j["participants_min"] = c.participants_min;
    j["participants_max"] = c.participants_max;
    j["messages_min"] = c.messages_min;
    j["messages_max"] = c.messages_max;
    j["alt_probability"] = c.alt_probability;
    j["activation_probability"] = c.activation_probability;
    j["actions_min"] = c.actions_min;
    j["actions_max"] = c.actions_max;
    j["decision_probability"] = c.decision_probability;
    j["fork_probability"] = c.fork_probability;
    j["label_vocabulary_size"] = c.label_vocabulary_size;
    return j;
}

Result<GenConfig, std::string> config_from_json(const nlohmann::json& j) {
    GenConfig c;
    try {
        c.seed = j.at("seed").get<std::uint64_t>();
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "sequence") c.kind = DiagramKind::Sequence;
        else if (kind == "activity") c.kind = DiagramKind::Activity;
        else return std::string("unknown diagram kind: " + kind);
        if (!size_class_from_string(j.at("size_class").get<std::string>(), c.size_class)) {
            return std::string("unknown size class");
        }
        c.participants_min = j.at("participants_min").get<int>();
        c.participants_max = j.at("participants_max").get<int>();
        c.messages_min = j.at("messages_min").get<int>();
        c.messages_max = j.at("messages_max").get<int>();
        c.alt_probability = j.at("alt_probability").get<double>();
        c.activation_probability = j.at("activation_probability").get<double>();
        c.actions_min = j.at("actions_min").get<int>();
        c.actions_max = j.at("actions_max").get<int>();
        c.decision_probability = j.at("decision_probability").get<double>();
        c.fork_probability = j.at("fork_probability").get<double>();
        c.label_vocabulary_size = j.at("label_vocabulary_size").get<int>();
    } catch (const nlohmann::json::exception& e) {
        return std::string("malformed generation config: ") + e.what();
    }
    return c;
}

}  // namespace

const DatasetEntry* Corpus::find(std::string_view id) const {
    for (const DatasetEntry& e : entries) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

Result<Corpus, std::string> build_corpus(const GenConfig& config,
                                         std::uint64_t target_total) {
    if (std::string problem = config.check(); !problem.empty()) return problem;
    if (target_total < 5) {
        return std::string("target total must be at least 5 for an 80/20 split");
    }

    Corpus corpus;
    corpus.manifest.config = config;
    corpus.manifest.requested_total = target_total;

    std::unordered_set<std::string> seen;
    const std::uint64_t draw_budget = 10 * target_total;
    std::uint64_t draws = 0;
    while (corpus.entries.size() < target_total && draws < draw_budget) {
        DiagramAst ast = gen_ast(config, draws);
        ++draws;
        std::string code = print(ast);
        if (!seen.insert(code).second) {
            ++corpus.manifest.duplicates_dropped;
            continue;
        }
        DatasetEntry entry;
        entry.id = sha256_hex(code, 16);
        entry.image_path = "images/" + entry.id + ".png";
        entry.prompt = std::string(kDatasetPrompt);
        entry.code = std::move(code);
        entry.ast = std::move(ast);
        corpus.entries.push_back(std::move(entry));
    }
    corpus.manifest.emitted_total = corpus.entries.size();
    corpus.manifest.budget_exhausted = corpus.entries.size() < target_total;

    std::vector<std::string> ids;
    ids.reserve(corpus.entries.size());
    for (const DatasetEntry& e : corpus.entries) ids.push_back(e.id);
    auto [train, test] = split_corpus(ids, config.seed);
    corpus.manifest.train_ids = std::move(train);
    corpus.manifest.test_ids = std::move(test);
    return corpus;
}

std::pair<std::vector<std::string>, std::vector<std::string>> split_corpus(
    const std::vector<std::string>& ids, std::uint64_t seed, double ratio) {
    std::vector<std::string> shuffled = ids;
    Rng rng(mix_seed(seed, kSplitSalt));
    for (std::size_t i = shuffled.size(); i > 1; --i) {
        std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    }
    auto train_count = static_cast<std::size_t>(
        std::llround(ratio * static_cast<double>(shuffled.size())));
    if (train_count > shuffled.size()) train_count = shuffled.size();
    std::vector<std::string> train(shuffled.begin(),
                                   shuffled.begin() + static_cast<std::ptrdiff_t>(train_count));
    std::vector<std::string> test(shuffled.begin() + static_cast<std::ptrdiff_t>(train_count),
                                  shuffled.end());
    return {std::move(train), std::move(test)};
}

namespace {

Result<std::string, EmitError> emit_split(const std::filesystem::path& corpus_root,
                                          const Corpus& corpus,
                                          const std::vector<std::string>& ids,
                                          bool training_shape) {
    std::unordered_map<std::string_view, const DatasetEntry*> by_id;
    by_id.reserve(corpus.entries.size());
    for (const DatasetEntry& e : corpus.entries) by_id.emplace(e.id, &e);

    ordered_json array = ordered_json::array();
    for (const std::string& id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            return EmitError{id, "manifest id not present in corpus: " + id};
        }
        const DatasetEntry& entry = *it->second;
        if (!std::filesystem::exists(corpus_root / entry.image_path)) {
            return EmitError{id, "image not rendered for entry " + id};
        }
        ordered_json element;
        element["id"] = entry.id;
        element["image"] = entry.image_path;
        if (training_shape) {
            ordered_json conversations = ordered_json::array();
            conversations.push_back({{"from", "human"}, {"value", entry.prompt}});
            conversations.push_back({{"from", "gpt"}, {"value", entry.code}});
            element["conversations"] = std::move(conversations);
        } else {
            element["question"] = entry.prompt;
            element["answer"] = entry.code;
        }
        array.push_back(std::move(element));
    }
    return dump_json(array);
}

}  // namespace

Result<std::string, EmitError> training_json(const std::filesystem::path& corpus_root,
                                             const Corpus& corpus) {
    return emit_split(corpus_root, corpus, corpus.manifest.train_ids, true);
}

Result<std::string, EmitError> test_json(const std::filesystem::path& corpus_root,
                                         const Corpus& corpus) {
    return emit_split(corpus_root, corpus, corpus.manifest.test_ids, false);
}

nlohmann::ordered_json training_config(FineTuneStrategy strategy) {
    ordered_json j;
    if (strategy == FineTuneStrategy::LoRA) {
        j["lora_enable"] = true;
        j["lora_r"] = 128;
        j["lora_alpha"] = 256;
        j["mm_projector_lr"] = 2e-5;
        j["learning_rate"] = 2e-4;
        j["per_device_train_batch_size"] = 16;
        j["gradient_accumulation_steps"] = 4;
    } else {
        j["learning_rate"] = 2e-5;
        j["per_device_train_batch_size"] = 8;
        j["gradient_accumulation_steps"] = 4;
    }
    return j;
}

nlohmann::ordered_json manifest_json(const CorpusManifest& manifest) {
    ordered_json j;
    j["config"] = config_json(manifest.config);
    j["requested_total"] = manifest.requested_total;
    j["emitted_total"] = manifest.emitted_total;
    j["duplicates_dropped"] = manifest.duplicates_dropped;
    j["budget_exhausted"] = manifest.budget_exhausted;
    j["train_ids"] = manifest.train_ids;
    j["test_ids"] = manifest.test_ids;
    return j;
}

Result<CorpusManifest, std::string> manifest_from_json(const nlohmann::json& j) {
    CorpusManifest m;
    auto config = config_from_json(j.contains("config") ? j.at("config") : nlohmann::json());
    if (!config) return config.error();
    m.config = config.value();
    try {
        m.requested_total = j.at("requested_total").get<std::uint64_t>();
        m.emitted_total = j.at("emitted_total").get<std::uint64_t>();
        m.duplicates_dropped = j.at("duplicates_dropped").get<std::uint64_t>();
        m.budget_exhausted = j.at("budget_exhausted").get<bool>();
        m.train_ids = j.at("train_ids").get<std::vector<std::string>>();
        m.test_ids = j.at("test_ids").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        return std::string("malformed manifest: ") + e.what();
    }
    return m;
}

std::string dump_json(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

}  // namespace umlforge
