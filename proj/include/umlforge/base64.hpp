// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_BASE64_HPP
#define UMLFORGE_BASE64_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace umlforge {

std::string base64_encode(const std::uint8_t* data, std::size_t size);

inline std::string base64_encode(const std::vector<std::uint8_t>& data) {
    return base64_encode(data.data(), data.size());
}

}  // namespace umlforge

#endif
