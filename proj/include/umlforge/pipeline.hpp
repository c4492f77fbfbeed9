// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_PIPELINE_HPP
#define UMLFORGE_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "umlforge/client.hpp"
#include "umlforge/corpus.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

// ---------------------------------------------------------------------------
// generate: corpus directory layout
//   out_dir/{images/*.png, code/*.txt, manifest.json, train.json, test.json,
//            training_config_lora.json, training_config_full.json}
// ---------------------------------------------------------------------------

struct GenerateOptions {
    std::filesystem::path out_dir;
    GenConfig config;
    std::uint64_t count_override = 0;  // 0 = size-class target
    int jobs = 1;
};

/// Builds, renders and writes a complete corpus directory. On failure all
/// partial output is removed. Returns the manifest that was written.
Result<CorpusManifest, std::string> generate_corpus_dir(const GenerateOptions& options);

// ---------------------------------------------------------------------------
// evaluate: scores test entries against an endpoint or a replay file
// ---------------------------------------------------------------------------

struct EvaluateOptions {
    std::filesystem::path corpus_dir;
    std::string endpoint;                  // empty selects offline scoring
    std::filesystem::path responses_file;  // offline replay: [{id, response}]
    std::filesystem::path report_path;
    std::string model_label = "offline";
    EndpointConfig net;
    int jobs = 1;
    std::uint64_t limit = 0;  // 0 = every test entry
};

enum class EvalErrorKind { Data, Endpoint };

struct EvalError {
    EvalErrorKind kind = EvalErrorKind::Data;
    std::string message;
};

/// Per-entry scoring (BLEU, SSIM, error category, latency) plus the dataset
/// aggregate row, written to report_path. Offline runs are byte-deterministic;
/// wall-clock information goes to a sidecar file next to the report.
Result<std::monostate, EvalError> evaluate_corpus(const EvaluateOptions& options);

// ---------------------------------------------------------------------------
// report: merge report.json files into a table
// ---------------------------------------------------------------------------

enum class ReportFormat { Csv, Markdown };

Result<std::monostate, std::string> report_tables(
    const std::vector<std::filesystem::path>& inputs, ReportFormat format,
    const std::filesystem::path& out_path);

}  // namespace umlforge

#endif
