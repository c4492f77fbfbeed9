// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_BLEU_HPP
#define UMLFORGE_BLEU_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umlforge/result.hpp"

namespace umlforge {

using TokenSeq = std::vector<std::string>;

/// Whitespace split with { : ; ( ) } as single-character tokens and the two
/// arrow forms "->" / "-->" kept whole. Case-preserving; never produces an
/// empty token.
TokenSeq tokenize(std::string_view source);

struct MetricError {
    std::string message;
};

struct BleuScore {
    double value = 0.0;
    std::array<double, 4> precisions{};  // unsmoothed modified precisions
    double brevity_penalty = 0.0;
};

enum class BleuSmoothing {
    None,     // any zero precision zeroes the score
    Epsilon,  // zero precisions become 1e-9 inside the geometric mean
};

/// Sentence BLEU: clipped modified n-gram precisions up to max_n, uniform
/// weights, brevity penalty exp(1 - r/c) when the candidate is shorter.
/// Orders the candidate is too short to form are excluded and the weight is
/// spread over the remaining ones, so bleu(x, x) is exactly 1 for any
/// non-empty x.
Result<BleuScore, MetricError> bleu(const TokenSeq& candidate, const TokenSeq& reference,
                                    int max_n = 4,
                                    BleuSmoothing smoothing = BleuSmoothing::None);

struct CorpusBleuScore {
    BleuScore pooled;               // counts pooled across pairs, unsmoothed
    double mean_sentence_bleu = 0;  // epsilon-smoothed per-pair mean
};

Result<CorpusBleuScore, MetricError> corpus_bleu(
    const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs, int max_n = 4);

}  // namespace umlforge

#endif
