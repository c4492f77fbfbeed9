// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force BLEU reference, written before the production metric and kept
// deliberately naive: n-grams as token vectors, counts via linear scans. Test
// code only; must stay independent of src/bleu.cpp.

#ifndef UMLFORGE_TESTS_BLEU_ORACLE_HPP
#define UMLFORGE_TESTS_BLEU_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace umlforge_tests {

using Gram = std::vector<std::string>;

inline std::vector<Gram> grams_of(const std::vector<std::string>& tokens, int n) {
    std::vector<Gram> out;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
        out.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                         tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
    return out;
}

inline long count_gram(const std::vector<Gram>& grams, const Gram& g) {
    long count = 0;
    for (const Gram& x : grams) {
        if (x == g) ++count;
    }
    return count;
}

inline double oracle_bleu(const std::vector<std::string>& cand,
                          const std::vector<std::string>& ref) {
    if (cand.empty()) return 0.0;
    // Orders the candidate cannot form are undefined and excluded; uniform
    // weight over the remaining orders.
    int defined = 0;
    for (int n = 1; n <= 4; ++n) {
        if (!grams_of(cand, n).empty()) ++defined;
    }
    if (defined == 0) return 0.0;
    double log_sum = 0.0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<Gram> cand_grams = grams_of(cand, n);
        std::vector<Gram> ref_grams = grams_of(ref, n);
        if (cand_grams.empty()) continue;
        long clipped = 0;
        std::vector<Gram> seen;
        for (const Gram& g : cand_grams) {
            if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
            seen.push_back(g);
            clipped += std::min(count_gram(cand_grams, g), count_gram(ref_grams, g));
        }
        if (clipped == 0) return 0.0;
        log_sum += (1.0 / static_cast<double>(defined)) *
                   std::log(static_cast<double>(clipped) /
                            static_cast<double>(cand_grams.size()));
    }
    double bp = cand.size() > ref.size()
                    ? 1.0
                    : std::exp(1.0 - static_cast<double>(ref.size()) /
                                         static_cast<double>(cand.size()));
    return bp * std::exp(log_sum);
}

}  // namespace umlforge_tests

#endif
