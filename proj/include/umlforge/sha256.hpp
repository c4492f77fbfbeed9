// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_SHA256_HPP
#define UMLFORGE_SHA256_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace umlforge {

/// FIPS 180-4 SHA-256 of a byte string.
std::array<std::uint8_t, 32> sha256(std::string_view data);

/// Lowercase hex digest, optionally truncated to `hex_chars` characters.
std::string sha256_hex(std::string_view data, std::size_t hex_chars = 64);

}  // namespace umlforge

#endif
