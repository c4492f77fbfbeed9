// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/base64.hpp"

namespace umlforge {

std::string base64_encode(const std::uint8_t* data, std::size_t size) {
    static const char* kAlphabet =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((size + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= size; i += 3) {
        std::uint32_t v = static_cast<std::uint32_t>(data[i]) << 16 |
                          static_cast<std::uint32_t>(data[i + 1]) << 8 |
                          static_cast<std::uint32_t>(data[i + 2]);
        out.push_back(kAlphabet[v >> 18]);
        out.push_back(kAlphabet[(v >> 12) & 63]);
        out.push_back(kAlphabet[(v >> 6) & 63]);
        out.push_back(kAlphabet[v & 63]);
    }
    if (i + 1 == size) {
        std::uint32_t v = static_cast<std::uint32_t>(data[i]) << 16;
        out.push_back(kAlphabet[v >> 18]);
        out.push_back(kAlphabet[(v >> 12) & 63]);
        out += "==";
    } else if (i + 2 == size) {
        std::uint32_t v = static_cast<std::uint32_t>(data[i]) << 16 |
                          static_cast<std::uint32_t>(data[i + 1]) << 8;
        out.push_back(kAlphabet[v >> 18]);
        out.push_back(kAlphabet[(v >> 12) & 63]);
        out.push_back(kAlphabet[(v >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

}  // namespace umlforge
