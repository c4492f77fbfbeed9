// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/bleu.hpp"

#include <cctype>
#include <cmath>
#include <unordered_map>

namespace umlforge {

namespace {

constexpr double kEpsilonPrecision = 1e-9;

// n-grams keyed as tokens joined by a non-printable separator.
void count_grams(const TokenSeq& tokens, int n,
                 std::unordered_map<std::string, long>& counts) {
    if (static_cast<int>(tokens.size()) < n) return;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
        std::string key;
        for (int j = 0; j < n; ++j) {
            if (j) key.push_back('\x1f');
            key += tokens[i + static_cast<std::size_t>(j)];
        }
        ++counts[key];
    }
}

void clipped_counts(const TokenSeq& candidate, const TokenSeq& reference, int n,
                    long& clipped, long& total) {
    total = static_cast<int>(candidate.size()) >= n
                ? static_cast<long>(candidate.size()) - n + 1
                : 0;
    clipped = 0;
    if (total == 0) return;
    std::unordered_map<std::string, long> ref_counts;
    std::unordered_map<std::string, long> cand_counts;
    count_grams(reference, n, ref_counts);
    count_grams(candidate, n, cand_counts);
    for (const auto& [gram, count] : cand_counts) {
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) clipped += std::min(count, it->second);
    }
}

BleuScore score_from_counts(const long clipped[], const long total[], int max_n,
                            std::size_t cand_len, std::size_t ref_len,
                            BleuSmoothing smoothing) {
    BleuScore score;
    if (cand_len == 0) return score;  // value 0, brevity penalty 0

    // Orders the candidate cannot form (total 0) are undefined and excluded;
    // the uniform weight spreads over the defined orders. Keeps the identity
    // candidate==reference at exactly 1.0 for short sequences.
    int defined = 0;
    for (int n = 0; n < max_n; ++n) {
        if (total[n] > 0) ++defined;
    }
    if (defined == 0) return score;

    bool any_zero = false;
    double log_sum = 0.0;
    const double weight = 1.0 / static_cast<double>(defined);
    for (int n = 0; n < max_n; ++n) {
        if (total[n] <= 0) continue;
        double p = static_cast<double>(clipped[n]) / static_cast<double>(total[n]);
        if (n < 4) score.precisions[static_cast<std::size_t>(n)] = p;
        if (p > 0.0) {
            log_sum += weight * std::log(p);
        } else {
            any_zero = true;
            if (smoothing == BleuSmoothing::Epsilon) {
                log_sum += weight * std::log(kEpsilonPrecision);
            }
        }
    }
    score.brevity_penalty =
        cand_len > ref_len
            ? 1.0
            : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(cand_len));
    if (any_zero && smoothing == BleuSmoothing::None) {
        score.value = 0.0;
    } else {
        score.value = score.brevity_penalty * std::exp(log_sum);
    }
    return score;
}

}  // namespace

TokenSeq tokenize(std::string_view source) {
    TokenSeq out;
    std::string word;
    auto flush = [&] {
        if (!word.empty()) {
            out.push_back(word);
            word.clear();
        }
    };
    std::size_t i = 0;
    while (i < source.size()) {
        char c = source[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            ++i;
            continue;
        }
        if (c == ':' || c == ';' || c == '(' || c == ')') {
            flush();
            out.emplace_back(1, c);
            ++i;
            continue;
        }
        if (c == '-') {
            if (source.substr(i, 3) == "-->") {
                flush();
                out.emplace_back("-->");
                i += 3;
                continue;
            }
            if (source.substr(i, 2) == "->") {
                flush();
                out.emplace_back("->");
                i += 2;
                continue;
            }
        }
        word.push_back(c);
        ++i;
    }
    flush();
    return out;
}

Result<BleuScore, MetricError> bleu(const TokenSeq& candidate, const TokenSeq& reference,
                                    int max_n, BleuSmoothing smoothing) {
    if (reference.empty()) return MetricError{"empty reference"};
    if (max_n < 1 || max_n > 4) return MetricError{"max_n must be in [1, 4]"};
    long clipped[4] = {};
    long total[4] = {};
    for (int n = 1; n <= max_n; ++n) {
        clipped_counts(candidate, reference, n, clipped[n - 1], total[n - 1]);
    }
    return score_from_counts(clipped, total, max_n, candidate.size(), reference.size(),
                             smoothing);
}

Result<CorpusBleuScore, MetricError> corpus_bleu(
    const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs, int max_n) {
    if (pairs.empty()) return MetricError{"empty corpus"};
    if (max_n < 1 || max_n > 4) return MetricError{"max_n must be in [1, 4]"};

    long clipped[4] = {};
    long total[4] = {};
    std::size_t cand_len = 0;
    std::size_t ref_len = 0;
    double sentence_sum = 0.0;
    for (const auto& [candidate, reference] : pairs) {
        if (reference.empty()) return MetricError{"empty reference in corpus"};
        for (int n = 1; n <= max_n; ++n) {
            long c = 0;
            long t = 0;
            clipped_counts(candidate, reference, n, c, t);
            clipped[n - 1] += c;
            total[n - 1] += t;
        }
        cand_len += candidate.size();
        ref_len += reference.size();
        auto sentence = bleu(candidate, reference, max_n, BleuSmoothing::Epsilon);
        sentence_sum += sentence.value().value;
    }

    CorpusBleuScore score;
    score.pooled = score_from_counts(clipped, total, max_n, cand_len, ref_len,
                                     BleuSmoothing::None);
    score.mean_sentence_bleu = sentence_sum / static_cast<double>(pairs.size());
    return score;
}

}  // namespace umlforge
