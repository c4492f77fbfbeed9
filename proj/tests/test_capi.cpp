// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface the way an embedding application
// would: only umlforge.h, no core headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "umlforge.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("umlforge-capi-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("parse, print, validate and free through the C API") {
    uf_ast* ast = nullptr;
    char* error = nullptr;
    REQUIRE(uf_parse("@startuml\nparticipant A\nA -> B : hi\n@enduml", 0, &ast,
                     &error) == UF_OK);
    REQUIRE(ast != nullptr);
    CHECK(uf_ast_kind(ast) == UF_KIND_SEQUENCE);
    CHECK(uf_ast_validate(ast, nullptr) == 0);

    char* printed = uf_ast_print(ast);
    REQUIRE(printed != nullptr);
    CHECK(std::string(printed) ==
          "@startuml\nparticipant A\nA -> B : hi\n@enduml\n");
    uf_string_free(printed);
    uf_ast_free(ast);

    // Strict mode rejects the same source.
    uf_ast* strict_ast = nullptr;
    uf_status status = uf_parse("@startuml\nA -> B : hi\n@enduml", 1, &strict_ast,
                                &error);
    CHECK(status == UF_ERR_PARSE);
    REQUIRE(error != nullptr);
    CHECK(std::string(error).find("UndeclaredParticipant") != std::string::npos);
    uf_string_free(error);
}

TEST_CASE("detect and extract through the C API") {
    CHECK(uf_detect_kind("@startuml\nA -> B : m\n@enduml") == UF_GUESS_SEQUENCE);
    CHECK(uf_detect_kind("@startuml\nclass Foo {\n}\n@enduml") == UF_GUESS_OTHER_UML);
    CHECK(uf_detect_kind("no diagrams here") == UF_GUESS_NOT_UML);

    char* block = uf_extract_uml_block("text @startuml\nX -> Y\n@enduml trailing");
    REQUIRE(block != nullptr);
    CHECK(std::string(block) == "@startuml\nX -> Y\n@enduml");
    uf_string_free(block);
    CHECK(uf_extract_uml_block("nothing") == nullptr);
}

TEST_CASE("render, png io, ssim and bleu through the C API") {
    TempDir dir;
    uf_image* image = nullptr;
    int syntax_failure = -1;
    REQUIRE(uf_render_source("@startuml\nparticipant A\n@enduml", &image,
                             &syntax_failure) == UF_OK);
    CHECK(syntax_failure == 0);
    CHECK(uf_image_width(image) == 192);
    CHECK(uf_image_height(image) == 116);
    REQUIRE(uf_image_pixels(image) != nullptr);
    CHECK(uf_image_pixels(image)[0] == 255);

    const fs::path png_path = dir.path / "a.png";
    char* error = nullptr;
    REQUIRE(uf_image_write_png(image, png_path.string().c_str(), &error) == UF_OK);
    uf_image* back = nullptr;
    REQUIRE(uf_image_read_png(png_path.string().c_str(), &back, &error) == UF_OK);
    CHECK(uf_image_width(back) == uf_image_width(image));

    double similarity = 0.0;
    REQUIRE(uf_ssim(image, back, &similarity, &error) == UF_OK);
    CHECK(similarity == doctest::Approx(1.0).epsilon(1e-9));
    uf_image_free(back);
    uf_image_free(image);

    // A broken candidate yields the error plate and a syntax flag.
    uf_image* plate = nullptr;
    REQUIRE(uf_render_source("@startuml\nalt broken\n@enduml", &plate,
                             &syntax_failure) == UF_OK);
    CHECK(syntax_failure == 1);
    CHECK(uf_image_width(plate) == 512);
    uf_image_free(plate);

    double value = 0.0;
    REQUIRE(uf_bleu("A -> B : hi", "A -> B : hi", &value, &error) == UF_OK);
    CHECK(value == doctest::Approx(1.0));
    REQUIRE(uf_bleu("x y z", "a b c", &value, &error) == UF_OK);
    CHECK(value == 0.0);
    CHECK(uf_bleu("apple", "", &value, &error) == UF_ERR_DATA);
    uf_string_free(error);
    error = nullptr;
}

TEST_CASE("classify through the C API") {
    CHECK(uf_classify("no code at all", UF_KIND_SEQUENCE) ==
          UF_CATEGORY_UML_ABSENCE);
    CHECK(uf_classify("@startuml\nalt nope\n@enduml", UF_KIND_SEQUENCE) ==
          UF_CATEGORY_SYNTAX_ERROR);
    CHECK(uf_classify("@startuml\nstart\n:Go;\nstop\n@enduml", UF_KIND_SEQUENCE) ==
          UF_CATEGORY_DIAGRAM_MISMATCH);
    CHECK(uf_classify("@startuml\nA -> B : go\n@enduml", UF_KIND_SEQUENCE) ==
          UF_CATEGORY_CLEAN);
}

TEST_CASE("generate, offline evaluate and report through the C API") {
    TempDir dir;
    const fs::path corpus = dir.path / "corpus";

    uf_generate_options gen{};
    std::string out_dir = corpus.string();
    gen.out_dir = out_dir.c_str();
    gen.kind = UF_KIND_ACTIVITY;
    gen.size_class = "small";
    gen.seed = 5;
    gen.count_override = 10;
    gen.jobs = 2;
    char* error = nullptr;
    REQUIRE_MESSAGE(uf_generate_corpus(&gen, &error) == UF_OK,
                    (error ? error : "no detail"));

    CHECK(fs::exists(corpus / "manifest.json"));
    CHECK(fs::exists(corpus / "train.json"));
    CHECK(fs::exists(corpus / "test.json"));
    CHECK(fs::exists(corpus / "training_config_lora.json"));
    CHECK(fs::exists(corpus / "training_config_full.json"));

    // Build a perfect replay file: every test answer echoed back.
    std::ifstream test_file(corpus / "test.json");
    auto test_doc = nlohmann::json::parse(test_file);
    nlohmann::json replay = nlohmann::json::array();
    for (const auto& entry : test_doc) {
        replay.push_back({{"id", entry["id"]}, {"response", entry["answer"]}});
    }
    const fs::path replay_path = dir.path / "responses.json";
    std::ofstream(replay_path) << replay.dump();

    const fs::path report_path = dir.path / "report.json";
    uf_evaluate_options eval{};
    std::string corpus_str = corpus.string();
    std::string replay_str = replay_path.string();
    std::string report_str = report_path.string();
    eval.corpus_dir = corpus_str.c_str();
    eval.responses_file = replay_str.c_str();
    eval.report_path = report_str.c_str();
    eval.model_label = "replay";
    eval.jobs = 2;
    REQUIRE_MESSAGE(uf_evaluate_corpus(&eval, &error) == UF_OK,
                    (error ? error : "no detail"));

    std::ifstream report_file(report_path);
    auto report = nlohmann::json::parse(report_file);
    CHECK(report["corpus_bleu"] == 1.0);
    CHECK(report["mean_ssim"] == 1.0);
    CHECK(report["syntax_rate"] == 0.0);
    CHECK(report["absence_rate"] == 0.0);
    CHECK(report["mismatch_rate"] == 0.0);
    CHECK(report["model_label"] == "replay");
    CHECK(report["dataset_label"] == "activity-small");

    // Report table in both formats.
    const fs::path csv_path = dir.path / "table.csv";
    const char* inputs[] = {report_str.c_str()};
    uf_report_options table{};
    std::string csv_str = csv_path.string();
    table.inputs = inputs;
    table.input_count = 1;
    table.format = "csv";
    table.out_path = csv_str.c_str();
    REQUIRE(uf_report_tables(&table, &error) == UF_OK);
    std::ifstream csv_file(csv_path);
    std::string header;
    std::getline(csv_file, header);
    CHECK(header.find("dataset,model,corpus_bleu") == 0);

    table.format = "nonsense";
    CHECK(uf_report_tables(&table, &error) == UF_ERR_INVALID_ARG);
    uf_string_free(error);
}

TEST_CASE("argument validation returns usage errors") {
    CHECK(uf_parse(nullptr, 0, nullptr, nullptr) == UF_ERR_INVALID_ARG);
    CHECK(uf_generate_corpus(nullptr, nullptr) == UF_ERR_INVALID_ARG);
    CHECK(uf_evaluate_corpus(nullptr, nullptr) == UF_ERR_INVALID_ARG);
    CHECK(uf_report_tables(nullptr, nullptr) == UF_ERR_INVALID_ARG);
    CHECK(std::string(uf_status_name(UF_ERR_ENDPOINT)) == "endpoint-error");
}
