// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_PNG_HPP
#define UMLFORGE_PNG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "umlforge/raster.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

struct PngError {
    std::string message;
};

/// Encodes as 8-bit grayscale, non-interlaced, filter None, fixed zlib
/// settings. Determinism of outputs is defined on pixel buffers; the encoded
/// bytes are additionally stable for a given zlib build.
std::vector<std::uint8_t> encode_png_gray(const RasterImage& image);

Result<std::monostate, PngError> write_png_gray(const RasterImage& image,
                                                const std::filesystem::path& path);

/// Decodes 8-bit gray/RGB/palette/alpha PNGs (palette and gray also at bit
/// depths 1/2/4) to grayscale. Color converts with integer BT.601 weights;
/// alpha composites over white. Interlaced files are rejected.
Result<RasterImage, PngError> decode_png_gray(const std::uint8_t* data,
                                              std::size_t size);

Result<RasterImage, PngError> read_png_gray(const std::filesystem::path& path);

}  // namespace umlforge

#endif
