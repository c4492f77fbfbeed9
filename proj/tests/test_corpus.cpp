// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "umlforge/corpus.hpp"
#include "umlforge/detect.hpp"
#include "umlforge/parse.hpp"
#include "umlforge/png.hpp"
#include "umlforge/render.hpp"
#include "umlforge/sha256.hpp"
#include "umlforge/validate.hpp"

using namespace umlforge;
namespace fs = std::filesystem;

namespace {

GenConfig small_config(DiagramKind kind, std::uint64_t seed) {
    GenConfig config;
    config.kind = kind;
    config.seed = seed;
    return config;
}

struct TempDir {
    fs::path path;
    TempDir() {
        static std::atomic<int> counter{0};
        auto ticks = std::chrono::steady_clock::now().time_since_epoch().count();
        path = fs::temp_directory_path() /
               ("umlforge-test-" +
                sha256_hex(std::to_string(ticks) + "-" +
                               std::to_string(counter.fetch_add(1)),
                           12));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

void render_corpus_images(const fs::path& root, const Corpus& corpus) {
    fs::create_directories(root / "images");
    for (const DatasetEntry& entry : corpus.entries) {
        auto img = render_ast(entry.ast);
        REQUIRE(img.ok());
        REQUIRE(write_png_gray(img.value(), root / entry.image_path).ok());
    }
}

}  // namespace

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("abc", 16) == "ba7816bf8f01cfea");
    // Padding boundary cases: 55 and 56 byte messages.
    CHECK(sha256_hex(std::string(55, 'a')).size() == 64);
    CHECK(sha256_hex(std::string(56, 'a')) !=
          sha256_hex(std::string(55, 'a')));
}

TEST_CASE("gen_ast is deterministic per (seed, index)") {
    GenConfig config = small_config(DiagramKind::Sequence, 9);
    CHECK(print(gen_ast(config, 0)) == print(gen_ast(config, 0)));
    CHECK(print(gen_ast(config, 5)) == print(gen_ast(config, 5)));
    CHECK(print(gen_ast(config, 0)) != print(gen_ast(config, 1)));

    GenConfig other = config;
    other.seed = 10;
    CHECK(print(gen_ast(config, 0)) != print(gen_ast(other, 0)));
}

TEST_CASE("gen_ast ids are distinct across 10000 draws") {
    GenConfig config = small_config(DiagramKind::Activity, 4);
    std::set<std::string> ids;
    std::set<std::string> sources;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        std::string code = print(gen_ast(config, i));
        sources.insert(code);
        ids.insert(sha256_hex(code, 16));
    }
    // Exact duplicates may occur and are dropped by dedup; ids must never
    // collide for distinct sources.
    CHECK(ids.size() == sources.size());
    CHECK(sources.size() > 9900);
}

TEST_CASE("build_corpus small targets") {
    auto built = build_corpus(small_config(DiagramKind::Sequence, 2), 50);
    REQUIRE(built.ok());
    const Corpus& corpus = built.value();
    CHECK(corpus.manifest.emitted_total == 50);
    CHECK(corpus.manifest.train_ids.size() == 40);
    CHECK(corpus.manifest.test_ids.size() == 10);
    CHECK_FALSE(corpus.manifest.budget_exhausted);

    std::set<std::string> train(corpus.manifest.train_ids.begin(),
                                corpus.manifest.train_ids.end());
    std::set<std::string> test(corpus.manifest.test_ids.begin(),
                               corpus.manifest.test_ids.end());
    CHECK(train.size() == 40);
    CHECK(test.size() == 10);
    for (const std::string& id : test) CHECK(train.count(id) == 0);

    std::set<std::string> sources;
    for (const DatasetEntry& entry : corpus.entries) {
        sources.insert(entry.code);
        auto parsed = parse(entry.code);
        REQUIRE(parsed.ok());
        CHECK(validate(parsed.value()).empty());
        CHECK(detect_kind(entry.code) == DiagramKindGuess::Sequence);
        CHECK(entry.id == sha256_hex(entry.code, 16));
        CHECK(entry.image_path == "images/" + entry.id + ".png");
        CHECK(entry.prompt ==
              "<image>\n Generate the most likely UML code from the diagram.");
    }
    CHECK(sources.size() == corpus.entries.size());
}

TEST_CASE("build_corpus rejects tiny targets and bad configs") {
    CHECK_FALSE(build_corpus(small_config(DiagramKind::Sequence, 1), 4).ok());
    GenConfig bad = small_config(DiagramKind::Sequence, 1);
    bad.decision_probability = 1.5;
    CHECK_FALSE(build_corpus(bad, 10).ok());
}

TEST_CASE("split_corpus arithmetic and determinism") {
    std::vector<std::string> ids;
    for (int i = 0; i < 7500; ++i) ids.push_back("id" + std::to_string(i));
    auto [train, test] = split_corpus(ids, 1);
    CHECK(train.size() == 6000);
    CHECK(test.size() == 1500);

    auto [train2, test2] = split_corpus(ids, 1);
    CHECK(train == train2);
    CHECK(test == test2);

    auto [train3, test3] = split_corpus(ids, 2);
    CHECK(train3 != train);  // different seed shuffles differently

    std::vector<std::string> five = {"a", "b", "c", "d", "e"};
    auto [t5, s5] = split_corpus(five, 0);
    CHECK(t5.size() == 4);
    CHECK(s5.size() == 1);
}

TEST_CASE("training json matches the conversation schema") {
    TempDir dir;
    auto built = build_corpus(small_config(DiagramKind::Activity, 6), 5);
    REQUIRE(built.ok());
    render_corpus_images(dir.path, built.value());

    auto bytes = training_json(dir.path, built.value());
    REQUIRE(bytes.ok());
    auto doc = nlohmann::json::parse(bytes.value());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 4);
    for (const auto& element : doc) {
        CHECK(element.at("id").is_string());
        CHECK(element.at("image").get<std::string>().ends_with(".png"));
        const auto& conversations = element.at("conversations");
        REQUIRE(conversations.size() == 2);
        CHECK(conversations[0].at("from") == "human");
        CHECK(conversations[0].at("value") ==
              "<image>\n Generate the most likely UML code from the diagram.");
        CHECK(conversations[1].at("from") == "gpt");
        CHECK(conversations[1].at("value").get<std::string>().starts_with("@startuml"));
    }
    // Field order follows the training-file convention.
    CHECK(bytes.value().find("\"id\"") < bytes.value().find("\"image\""));
    CHECK(bytes.value().find("\"image\"") < bytes.value().find("\"conversations\""));

    auto again = training_json(dir.path, built.value());
    REQUIRE(again.ok());
    CHECK(bytes.value() == again.value());
}

TEST_CASE("test json mirrors manifest order with question-answer fields") {
    TempDir dir;
    auto built = build_corpus(small_config(DiagramKind::Sequence, 8), 10);
    REQUIRE(built.ok());
    render_corpus_images(dir.path, built.value());

    auto bytes = test_json(dir.path, built.value());
    REQUIRE(bytes.ok());
    auto doc = nlohmann::json::parse(bytes.value());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == built.value().manifest.test_ids.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        CHECK(doc[i].at("id") == built.value().manifest.test_ids[i]);
        CHECK(doc[i].at("question") ==
              "<image>\n Generate the most likely UML code from the diagram.");
        const DatasetEntry* entry = built.value().find(built.value().manifest.test_ids[i]);
        REQUIRE(entry != nullptr);
        CHECK(doc[i].at("answer") == entry->code);
    }
}

TEST_CASE("emit fails with the offending id when an image is missing") {
    TempDir dir;
    auto built = build_corpus(small_config(DiagramKind::Sequence, 12), 5);
    REQUIRE(built.ok());
    render_corpus_images(dir.path, built.value());
    fs::remove(dir.path / built.value().entries[0].image_path);

    auto train = training_json(dir.path, built.value());
    auto test = test_json(dir.path, built.value());
    bool failed_somewhere = !train.ok() || !test.ok();
    CHECK(failed_somewhere);
    if (!train.ok()) CHECK(train.error().missing_id == built.value().entries[0].id);
}

TEST_CASE("empty train split emits an empty array") {
    TempDir dir;
    Corpus corpus;
    corpus.manifest.config = small_config(DiagramKind::Sequence, 1);
    auto bytes = training_json(dir.path, corpus);
    REQUIRE(bytes.ok());
    CHECK(bytes.value() == "[]\n");
}

TEST_CASE("training config hyperparameters") {
    auto lora = training_config(FineTuneStrategy::LoRA);
    CHECK(lora.at("lora_enable") == true);
    CHECK(lora.at("lora_r") == 128);
    CHECK(lora.at("lora_alpha") == 256);
    CHECK(lora.at("mm_projector_lr") == 2e-5);
    CHECK(lora.at("learning_rate") == 2e-4);
    CHECK(lora.at("per_device_train_batch_size") == 16);
    CHECK(lora.at("gradient_accumulation_steps") == 4);

    auto full = training_config(FineTuneStrategy::Full);
    CHECK(full.at("learning_rate") == 2e-5);
    CHECK(full.at("per_device_train_batch_size") == 8);
    CHECK(full.at("gradient_accumulation_steps") == 4);
    CHECK_FALSE(full.contains("lora_enable"));
    CHECK_FALSE(full.contains("lora_r"));
    CHECK_FALSE(full.contains("lora_alpha"));
    CHECK_FALSE(full.contains("mm_projector_lr"));
}

TEST_CASE("manifest round-trips through json") {
    auto built = build_corpus(small_config(DiagramKind::Activity, 3), 8);
    REQUIRE(built.ok());
    auto doc = manifest_json(built.value().manifest);
    auto loaded = manifest_from_json(doc);
    REQUIRE(loaded.ok());
    CHECK(loaded.value().emitted_total == built.value().manifest.emitted_total);
    CHECK(loaded.value().train_ids == built.value().manifest.train_ids);
    CHECK(loaded.value().test_ids == built.value().manifest.test_ids);
    CHECK(loaded.value().config.kind == DiagramKind::Activity);
    CHECK(loaded.value().config.seed == 3);
}

TEST_CASE("size class targets") {
    CHECK(size_class_target(SizeClass::Small) == 7500);
    CHECK(size_class_target(SizeClass::Medium) == 15000);
    CHECK(size_class_target(SizeClass::Large) == 30000);
    CHECK(size_class_target(SizeClass::ExtraLarge) == 150000);
}
