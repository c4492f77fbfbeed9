// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "umlforge/pipeline.hpp"
#include "umlforge/png.hpp"
#include "umlforge/render.hpp"

namespace umlforge {

namespace {

namespace fs = std::filesystem;

bool write_file(const fs::path& path, std::string_view bytes) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) return false;
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return file.good();
}

/// Removes everything generate writes; used to leave no partial corpus behind.
void remove_outputs(const fs::path& out_dir, bool created_root) {
    std::error_code ec;
    if (created_root) {
        fs::remove_all(out_dir, ec);
        return;
    }
    for (const char* name :
         {"images", "code", "manifest.json", "train.json", "test.json",
          "training_config_lora.json", "training_config_full.json"}) {
        fs::remove_all(out_dir / name, ec);
    }
}

}  // namespace

Result<CorpusManifest, std::string> generate_corpus_dir(const GenerateOptions& options) {
    const fs::path& out = options.out_dir;
    std::error_code ec;
    bool created_root = false;
    if (!fs::exists(out)) {
        if (!fs::create_directories(out, ec)) {
            return "cannot create output directory: " + out.string();
        }
        created_root = true;
    }

    auto fail = [&](std::string message) -> Result<CorpusManifest, std::string> {
        remove_outputs(out, created_root);
        return message;
    };

    std::uint64_t target = options.count_override > 0
                               ? options.count_override
                               : size_class_target(options.config.size_class);
    auto built = build_corpus(options.config, target);
    if (!built) return fail(built.error());
    const Corpus& corpus = built.value();

    if (!fs::create_directories(out / "images", ec) && !fs::exists(out / "images")) {
        return fail("cannot create images directory");
    }
    if (!fs::create_directories(out / "code", ec) && !fs::exists(out / "code")) {
        return fail("cannot create code directory");
    }

    // Entries are independent; render and write across jobs.
    const int jobs = std::max(1, options.jobs);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure_message;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t index = next.fetch_add(1);
            if (index >= corpus.entries.size() || failed.load()) return;
            const DatasetEntry& entry = corpus.entries[index];
            auto rendered = render_ast(entry.ast);
            std::string problem;
            if (!rendered) {
                problem = "render failed for " + entry.id + ": " + rendered.error().message;
            } else {
                auto png = write_png_gray(rendered.value(), out / entry.image_path);
                if (!png.ok()) {
                    problem = png.error().message;
                } else if (!write_file(out / "code" / (entry.id + ".txt"), entry.code)) {
                    problem = "cannot write code file for " + entry.id;
                }
            }
            if (!problem.empty()) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure_message = problem;
                failed.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failed.load()) return fail(failure_message);

    auto train = training_json(out, corpus);
    if (!train) return fail(train.error().message);
    auto test = test_json(out, corpus);
    if (!test) return fail(test.error().message);

    bool wrote = write_file(out / "manifest.json", dump_json(manifest_json(corpus.manifest))) &&
                 write_file(out / "train.json", train.value()) &&
                 write_file(out / "test.json", test.value()) &&
                 write_file(out / "training_config_lora.json",
                            dump_json(training_config(FineTuneStrategy::LoRA))) &&
                 write_file(out / "training_config_full.json",
                            dump_json(training_config(FineTuneStrategy::Full)));
    if (!wrote) return fail("cannot write corpus metadata files");

    return corpus.manifest;
}

}  // namespace umlforge
