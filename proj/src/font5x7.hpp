// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_FONT5X7_HPP
#define UMLFORGE_FONT5X7_HPP

#include <cstdint>

namespace umlforge {

// Embedded 5x7 bitmap font for printable ASCII 32..126, column-major: five
// bytes per glyph, bit 0 of each byte is the top row. Glyphs outside the
// range render as a filled box.
extern const std::uint8_t kFont5x7[95][5];

}  // namespace umlforge

#endif
