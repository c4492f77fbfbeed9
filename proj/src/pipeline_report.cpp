// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "umlforge/pipeline.hpp"

namespace umlforge {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Row {
    std::string dataset;
    std::string model;
    double corpus_bleu = 0.0;
    double mean_sentence_bleu = 0.0;
    double mean_ssim = 0.0;
    double syntax_rate = 0.0;
    double absence_rate = 0.0;
    double mismatch_rate = 0.0;
    double eval_hours = 0.0;
};

constexpr const char* kColumns[] = {
    "dataset",     "model",        "corpus_bleu",   "mean_sentence_bleu",
    "mean_ssim",   "syntax_rate",  "absence_rate",  "mismatch_rate",
    "eval_hours"};

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

// RFC 4180: quote fields containing commas, quotes or newlines.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

Result<Row, std::string> parse_report(const fs::path& path) {
    std::ifstream file(path);
    if (!file) return "cannot open " + path.string();
    json doc = json::parse(file, nullptr, false);
    if (doc.is_discarded()) return "malformed JSON in " + path.string();
    Row row;
    try {
        row.dataset = doc.at("dataset_label").get<std::string>();
        row.model = doc.at("model_label").get<std::string>();
        row.corpus_bleu = doc.at("corpus_bleu").get<double>();
        row.mean_sentence_bleu = doc.at("mean_sentence_bleu").get<double>();
        row.mean_ssim = doc.at("mean_ssim").get<double>();
        row.syntax_rate = doc.at("syntax_rate").get<double>();
        row.absence_rate = doc.at("absence_rate").get<double>();
        row.mismatch_rate = doc.at("mismatch_rate").get<double>();
        row.eval_hours = doc.at("eval_hours").get<double>();
    } catch (const json::exception& e) {
        return "report schema violation in " + path.string() + ": " + e.what();
    }
    return row;
}

std::vector<std::string> row_cells(const Row& row) {
    return {row.dataset,
            row.model,
            fixed(row.corpus_bleu, 4),
            fixed(row.mean_sentence_bleu, 4),
            fixed(row.mean_ssim, 4),
            fixed(row.syntax_rate, 4),
            fixed(row.absence_rate, 4),
            fixed(row.mismatch_rate, 4),
            fixed(row.eval_hours, 3)};
}

}  // namespace

Result<std::monostate, std::string> report_tables(
    const std::vector<std::filesystem::path>& inputs, ReportFormat format,
    const std::filesystem::path& out_path) {
    if (inputs.empty()) return std::string("no report files given");

    std::vector<Row> rows;
    for (const fs::path& input : inputs) {
        auto row = parse_report(input);
        if (!row) return row.error();
        rows.push_back(std::move(row).value());
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.dataset != b.dataset) return a.dataset < b.dataset;
        return a.model < b.model;
    });

    std::string out;
    if (format == ReportFormat::Csv) {
        for (std::size_t i = 0; i < std::size(kColumns); ++i) {
            if (i) out += ',';
            out += kColumns[i];
        }
        out += "\r\n";
        for (const Row& row : rows) {
            auto cells = row_cells(row);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out += ',';
                out += csv_field(cells[i]);
            }
            out += "\r\n";
        }
    } else {
        out += "|";
        for (const char* column : kColumns) out += std::string(" ") + column + " |";
        out += "\n|";
        for (std::size_t i = 0; i < std::size(kColumns); ++i) out += " --- |";
        out += "\n";
        for (const Row& row : rows) {
            out += "|";
            for (const std::string& cell : row_cells(row)) out += " " + cell + " |";
            out += "\n";
        }
    }

    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) return "cannot write " + out_path.string();
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!file.good()) return "short write to " + out_path.string();
    return std::monostate{};
}

}  // namespace umlforge
