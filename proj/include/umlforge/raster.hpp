// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_RASTER_HPP
#define UMLFORGE_RASTER_HPP

#include <cstdint>
#include <vector>

namespace umlforge {

/// Row-major 8-bit grayscale pixel grid; 0 is black, 255 is white.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    static RasterImage filled(int w, int h, std::uint8_t value) {
        RasterImage img;
        img.width = w;
        img.height = h;
        img.pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h),
                          value);
        return img;
    }

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }

    void set(int x, int y, std::uint8_t value) {
        if (x < 0 || y < 0 || x >= width || y >= height) return;
        pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(x)] = value;
    }

    bool operator==(const RasterImage&) const = default;
};

}  // namespace umlforge

#endif
