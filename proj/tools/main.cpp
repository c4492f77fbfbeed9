// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// umlforge command line: generate synthetic diagram corpora, evaluate model
// responses against them, and merge evaluation reports into tables. Talks to
// the core exclusively through the C API in umlforge.h.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "umlforge.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitEndpoint = 3;

int exit_code_for(uf_status status) {
    switch (status) {
        case UF_OK: return kExitOk;
        case UF_ERR_INVALID_ARG: return kExitUsage;
        case UF_ERR_ENDPOINT: return kExitEndpoint;
        default: return kExitData;
    }
}

int report_failure(const char* verb, uf_status status, char* error) {
    std::fprintf(stderr, "umlforge %s failed (%s)%s%s\n", verb, uf_status_name(status),
                 error ? ": " : "", error ? error : "");
    uf_string_free(error);
    return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic UML diagram corpora and diagram-to-code evaluation"};
    app.require_subcommand(1);

    // generate ------------------------------------------------------------
    std::string gen_kind = "sequence";
    std::string gen_size = "small";
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    std::uint64_t gen_count = 0;
    int gen_jobs = 1;
    CLI::App* generate = app.add_subcommand("generate", "Generate a corpus directory");
    generate->add_option("--kind", gen_kind, "Diagram kind")
        ->check(CLI::IsMember({"sequence", "activity"}))
        ->required();
    generate->add_option("--size-class", gen_size, "Corpus size class")
        ->check(CLI::IsMember({"small", "medium", "large", "xlarge"}))
        ->required();
    generate->add_option("--seed", gen_seed, "Generation seed")->required();
    generate->add_option("--out", gen_out, "Output directory")->required();
    generate->add_option("--count", gen_count,
                         "Override the size-class total (train+test)");
    generate->add_option("--jobs", gen_jobs, "Parallel render workers")
        ->check(CLI::PositiveNumber);

    // evaluate ------------------------------------------------------------
    std::string eval_corpus;
    std::string eval_endpoint;
    std::string eval_responses;
    std::string eval_out = "report.json";
    std::string eval_model = "offline";
    double eval_timeout = 60.0;
    int eval_concurrency = 4;
    int eval_retries = 2;
    int eval_jobs = 1;
    std::uint64_t eval_limit = 0;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Score model responses");
    evaluate->add_option("--corpus", eval_corpus, "Corpus directory")->required();
    auto* endpoint_opt =
        evaluate->add_option("--endpoint", eval_endpoint, "Inference endpoint URL");
    evaluate->add_option("--responses", eval_responses,
                         "Replay file of precomputed responses [{id, response}]")
        ->excludes(endpoint_opt);
    evaluate->add_option("--out", eval_out, "Report path");
    evaluate->add_option("--model", eval_model, "Model label for the report");
    evaluate->add_option("--timeout", eval_timeout, "Per-request timeout (seconds)");
    evaluate->add_option("--concurrency", eval_concurrency,
                         "Max in-flight requests");
    evaluate->add_option("--retries", eval_retries, "Retries per request");
    evaluate->add_option("--jobs", eval_jobs, "Parallel scoring workers")
        ->check(CLI::PositiveNumber);
    evaluate->add_option("--limit", eval_limit, "Score only the first N entries");

    // report --------------------------------------------------------------
    std::vector<std::string> report_inputs;
    std::string report_format = "csv";
    std::string report_out;
    CLI::App* report = app.add_subcommand("report", "Merge reports into a table");
    report->add_option("--inputs", report_inputs, "report.json files")->required();
    report->add_option("--format", report_format, "Output format")
        ->check(CLI::IsMember({"csv", "markdown"}));
    report->add_option("--out", report_out, "Table output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    char* error = nullptr;
    if (generate->parsed()) {
        uf_generate_options options{};
        options.out_dir = gen_out.c_str();
        options.kind = gen_kind == "activity" ? UF_KIND_ACTIVITY : UF_KIND_SEQUENCE;
        options.size_class = gen_size.c_str();
        options.seed = gen_seed;
        options.count_override = gen_count;
        options.jobs = gen_jobs;
        uf_status status = uf_generate_corpus(&options, &error);
        if (status != UF_OK) return report_failure("generate", status, error);
        std::printf("corpus written to %s\n", gen_out.c_str());
        return kExitOk;
    }

    if (evaluate->parsed()) {
        if (eval_endpoint.empty() && eval_responses.empty()) {
            std::fprintf(stderr, "evaluate needs --endpoint or --responses\n");
            return kExitUsage;
        }
        uf_evaluate_options options{};
        options.corpus_dir = eval_corpus.c_str();
        options.endpoint = eval_endpoint.empty() ? nullptr : eval_endpoint.c_str();
        options.responses_file =
            eval_responses.empty() ? nullptr : eval_responses.c_str();
        options.report_path = eval_out.c_str();
        options.model_label = eval_model.c_str();
        options.timeout_seconds = eval_timeout;
        options.max_concurrent = eval_concurrency;
        options.max_retries = eval_retries;
        options.jobs = eval_jobs;
        options.limit = eval_limit;
        uf_status status = uf_evaluate_corpus(&options, &error);
        if (status != UF_OK) return report_failure("evaluate", status, error);
        std::printf("report written to %s\n", eval_out.c_str());
        return kExitOk;
    }

    std::vector<const char*> inputs;
    inputs.reserve(report_inputs.size());
    for (const std::string& path : report_inputs) inputs.push_back(path.c_str());
    uf_report_options options{};
    options.inputs = inputs.data();
    options.input_count = inputs.size();
    options.format = report_format.c_str();
    options.out_path = report_out.c_str();
    uf_status status = uf_report_tables(&options, &error);
    if (status != UF_OK) return report_failure("report", status, error);
    std::printf("table written to %s\n", report_out.c_str());
    return kExitOk;
}
