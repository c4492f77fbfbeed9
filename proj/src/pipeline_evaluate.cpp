// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "umlforge/bleu.hpp"
#include "umlforge/detect.hpp"
#include "umlforge/error_analysis.hpp"
#include "umlforge/pipeline.hpp"
#include "umlforge/png.hpp"
#include "umlforge/render.hpp"
#include "umlforge/ssim.hpp"

namespace umlforge {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

struct TestEntry {
    std::string id;
    std::string image;
    std::string question;
    std::string answer;
};

struct EntryScore {
    std::string id;
    ErrorCategory category = ErrorCategory::Clean;
    double bleu_value = 0.0;  // epsilon-smoothed sentence BLEU
    double ssim_value = 0.0;
    double latency_seconds = 0.0;
    TransportStatus transport = TransportStatus::Ok;
    TokenSeq candidate_tokens;
    TokenSeq reference_tokens;
};

Result<json, std::string> load_json_file(const fs::path& path) {
    std::ifstream file(path);
    if (!file) return "cannot open " + path.string();
    json parsed = json::parse(file, nullptr, false);
    if (parsed.is_discarded()) return "malformed JSON in " + path.string();
    return parsed;
}

bool write_file(const fs::path& path, std::string_view bytes) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) return false;
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return file.good();
}

fs::path sidecar_path(const fs::path& report) {
    fs::path p = report;
    p.replace_extension();
    p += ".sidecar.json";
    return p;
}

}  // namespace

Result<std::monostate, EvalError> evaluate_corpus(const EvaluateOptions& options) {
    auto data_error = [](std::string m) {
        return EvalError{EvalErrorKind::Data, std::move(m)};
    };
    const auto wall_begin = std::chrono::steady_clock::now();

    auto manifest_doc = load_json_file(options.corpus_dir / "manifest.json");
    if (!manifest_doc) return data_error(manifest_doc.error());
    auto manifest = manifest_from_json(manifest_doc.value());
    if (!manifest) return data_error(manifest.error());
    const DiagramKind kind = manifest.value().config.kind;
    const std::string dataset_label = std::string(to_string(kind)) + "-" +
                                      to_string(manifest.value().config.size_class);

    auto test_doc = load_json_file(options.corpus_dir / "test.json");
    if (!test_doc) return data_error(test_doc.error());
    if (!test_doc.value().is_array()) return data_error("test.json is not an array");
    std::vector<TestEntry> entries;
    for (const json& element : test_doc.value()) {
        TestEntry entry;
        try {
            entry.id = element.at("id").get<std::string>();
            entry.image = element.at("image").get<std::string>();
            entry.question = element.at("question").get<std::string>();
            entry.answer = element.at("answer").get<std::string>();
        } catch (const json::exception& e) {
            return data_error(std::string("malformed test entry: ") + e.what());
        }
        entries.push_back(std::move(entry));
        if (options.limit > 0 && entries.size() >= options.limit) break;
    }
    if (entries.empty()) return data_error("no test entries to score");

    // Obtain raw responses, either replayed from disk or from the endpoint.
    std::vector<std::string> responses(entries.size());
    std::vector<double> latencies(entries.size(), 0.0);
    std::vector<TransportStatus> transports(entries.size(), TransportStatus::Ok);
    const bool offline = options.endpoint.empty();
    double eval_hours = 0.0;

    if (offline) {
        auto replay_doc = load_json_file(options.responses_file);
        if (!replay_doc) return data_error(replay_doc.error());
        if (!replay_doc.value().is_array()) {
            return data_error("responses file is not an array");
        }
        std::unordered_map<std::string, std::string> by_id;
        for (const json& element : replay_doc.value()) {
            if (!element.contains("id") || !element.contains("response")) {
                return data_error("responses entries need id and response fields");
            }
            by_id[element["id"].get<std::string>()] =
                element["response"].get<std::string>();
        }
        for (std::size_t i = 0; i < entries.size(); ++i) {
            auto it = by_id.find(entries[i].id);
            if (it == by_id.end()) {
                return data_error("no replayed response for entry " + entries[i].id);
            }
            responses[i] = it->second;
        }
    } else {
        std::vector<QueryItem> items;
        items.reserve(entries.size());
        for (const TestEntry& entry : entries) {
            items.push_back(QueryItem{entry.id, options.corpus_dir / entry.image,
                                      entry.question});
        }
        EndpointConfig net = options.net;
        net.base_url = options.endpoint;
        BatchResult batch = run_batch(items, net);
        std::size_t failures = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            responses[i] = batch.responses[i].raw_text;
            latencies[i] = batch.responses[i].latency_seconds;
            transports[i] = batch.responses[i].status;
            if (batch.responses[i].status != TransportStatus::Ok) ++failures;
        }
        if (failures == entries.size()) {
            return EvalError{EvalErrorKind::Endpoint,
                             "every request failed; endpoint unusable: " +
                                 batch.responses.front().error_detail};
        }
        eval_hours = batch.timing.total_hours();
    }

    // Score entries in parallel; everything below is pure per entry.
    std::vector<EntryScore> scores(entries.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure_message;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size() || failed.load()) return;
            const TestEntry& entry = entries[i];
            EntryScore& score = scores[i];
            score.id = entry.id;
            score.latency_seconds = offline ? 0.0 : latencies[i];
            score.transport = transports[i];

            const std::string& response = responses[i];
            std::string block = extract_uml_block(response).value_or("");
            score.category = classify(response, kind);
            score.candidate_tokens = tokenize(block);
            score.reference_tokens = tokenize(entry.answer);

            auto sentence =
                bleu(score.candidate_tokens, score.reference_tokens, 4,
                     BleuSmoothing::Epsilon);
            if (sentence.ok()) score.bleu_value = sentence.value().value;

            RenderOutcome candidate = render_candidate(block);
            auto reference = read_png_gray(options.corpus_dir / entry.image);
            if (!reference) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure_message = "reference image unreadable for " + entry.id + ": " +
                                  reference.error().message;
                failed.store(true);
                return;
            }
            auto similarity = ssim(candidate.image, reference.value());
            if (!similarity.ok()) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure_message = "ssim failed for " + entry.id;
                failed.store(true);
                return;
            }
            score.ssim_value = similarity.value().value;
        }
    };

    std::vector<std::thread> pool;
    const int jobs = std::max(1, options.jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failed.load()) return data_error(failure_message);

    // Dataset-level aggregation.
    std::vector<std::pair<TokenSeq, TokenSeq>> pairs;
    pairs.reserve(scores.size());
    std::vector<ErrorCategory> categories;
    categories.reserve(scores.size());
    double ssim_sum = 0.0;
    for (EntryScore& score : scores) {
        pairs.emplace_back(std::move(score.candidate_tokens),
                           std::move(score.reference_tokens));
        categories.push_back(score.category);
        ssim_sum += score.ssim_value;
    }
    auto pooled = corpus_bleu(pairs);
    if (!pooled.ok()) return data_error("corpus BLEU failed: " + pooled.error().message);
    auto agg = aggregate(categories);
    if (!agg.ok()) return data_error(agg.error());

    ordered_json report;
    report["dataset_label"] = dataset_label;
    report["model_label"] = options.model_label;
    report["corpus_bleu"] = pooled.value().pooled.value;
    report["mean_sentence_bleu"] = pooled.value().mean_sentence_bleu;
    report["mean_ssim"] = ssim_sum / static_cast<double>(scores.size());
    report["syntax_rate"] = round_rate4(agg.value().syntax_rate());
    report["absence_rate"] = round_rate4(agg.value().absence_rate());
    report["mismatch_rate"] = round_rate4(agg.value().mismatch_rate());
    report["eval_hours"] = eval_hours;
    ordered_json entry_rows = ordered_json::array();
    for (const EntryScore& score : scores) {
        ordered_json row;
        row["id"] = score.id;
        row["category"] = to_string(score.category);
        row["bleu"] = score.bleu_value;
        row["ssim"] = score.ssim_value;
        row["latency_seconds"] = score.latency_seconds;
        row["transport"] = to_string(score.transport);
        entry_rows.push_back(std::move(row));
    }
    report["entries"] = std::move(entry_rows);

    if (!write_file(options.report_path, dump_json(report))) {
        return data_error("cannot write report: " + options.report_path.string());
    }

    // Wall-clock facts live beside the report so the report itself stays
    // byte-stable across replays.
    const double wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_begin)
            .count();
    ordered_json sidecar;
    sidecar["generated_unix_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    sidecar["wall_seconds"] = wall_seconds;
    sidecar["mode"] = offline ? "offline" : "endpoint";
    write_file(sidecar_path(options.report_path), dump_json(sidecar));

    return std::monostate{};
}

}  // namespace umlforge
