// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/png.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <fstream>

namespace umlforge {

namespace {

constexpr std::array<std::uint8_t, 8> kSignature = {0x89, 'P',  'N',  'G',
                                                    0x0D, 0x0A, 0x1A, 0x0A};

std::uint32_t crc32_of(const std::uint8_t* data, std::size_t size) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(data), static_cast<uInt>(size)));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t read_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) << 24 |
           static_cast<std::uint32_t>(p[1]) << 16 |
           static_cast<std::uint32_t>(p[2]) << 8 | static_cast<std::uint32_t>(p[3]);
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::uint8_t* data, std::size_t size) {
    put_u32(out, static_cast<std::uint32_t>(size));
    std::size_t crc_begin = out.size();
    out.insert(out.end(), type, type + 4);
    if (size > 0) out.insert(out.end(), data, data + size);
    put_u32(out, crc32_of(out.data() + crc_begin, size + 4));
}

int paeth(int a, int b, int c) {
    int p = a + b - c;
    int pa = std::abs(p - a);
    int pb = std::abs(p - b);
    int pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

std::uint8_t luma(int r, int g, int b) {
    // Integer BT.601: weights sum to 256.
    return static_cast<std::uint8_t>((77 * r + 150 * g + 29 * b + 128) >> 8);
}

std::uint8_t over_white(int value, int alpha) {
    return static_cast<std::uint8_t>((value * alpha + 255 * (255 - alpha) + 127) / 255);
}

}  // namespace

std::vector<std::uint8_t> encode_png_gray(const RasterImage& image) {
    const auto w = static_cast<std::size_t>(image.width);
    const auto h = static_cast<std::size_t>(image.height);

    // Filter byte 0 (None) per scanline.
    std::vector<std::uint8_t> raw;
    raw.reserve(h * (w + 1));
    for (std::size_t y = 0; y < h; ++y) {
        raw.push_back(0);
        raw.insert(raw.end(), image.pixels.begin() + static_cast<std::ptrdiff_t>(y * w),
                   image.pixels.begin() + static_cast<std::ptrdiff_t>((y + 1) * w));
    }

    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> compressed(bound);
    if (compress2(compressed.data(), &bound, raw.data(),
                  static_cast<uLong>(raw.size()), 6) != Z_OK) {
        compressed.clear();
        bound = 0;
    }
    compressed.resize(bound);

    std::vector<std::uint8_t> out(kSignature.begin(), kSignature.end());
    std::uint8_t ihdr[13];
    ihdr[0] = static_cast<std::uint8_t>(image.width >> 24);
    ihdr[1] = static_cast<std::uint8_t>(image.width >> 16);
    ihdr[2] = static_cast<std::uint8_t>(image.width >> 8);
    ihdr[3] = static_cast<std::uint8_t>(image.width);
    ihdr[4] = static_cast<std::uint8_t>(image.height >> 24);
    ihdr[5] = static_cast<std::uint8_t>(image.height >> 16);
    ihdr[6] = static_cast<std::uint8_t>(image.height >> 8);
    ihdr[7] = static_cast<std::uint8_t>(image.height);
    ihdr[8] = 8;   // bit depth
    ihdr[9] = 0;   // grayscale
    ihdr[10] = 0;  // compression
    ihdr[11] = 0;  // filter method
    ihdr[12] = 0;  // no interlace
    append_chunk(out, "IHDR", ihdr, sizeof ihdr);
    append_chunk(out, "IDAT", compressed.data(), compressed.size());
    append_chunk(out, "IEND", nullptr, 0);
    return out;
}

Result<std::monostate, PngError> write_png_gray(const RasterImage& image,
                                                const std::filesystem::path& path) {
    if (image.width < 1 || image.height < 1 ||
        image.pixels.size() != static_cast<std::size_t>(image.width) *
                                   static_cast<std::size_t>(image.height)) {
        return PngError{"malformed raster image"};
    }
    std::vector<std::uint8_t> bytes = encode_png_gray(image);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) return PngError{"cannot open for writing: " + path.string()};
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file.good()) return PngError{"short write: " + path.string()};
    return std::monostate{};
}

Result<RasterImage, PngError> decode_png_gray(const std::uint8_t* data,
                                              std::size_t size) {
    if (size < 8 || std::memcmp(data, kSignature.data(), 8) != 0) {
        return PngError{"not a PNG file"};
    }

    std::uint32_t width = 0;
    std::uint32_t height = 0;
    int bit_depth = 0;
    int color_type = 0;
    std::vector<std::array<std::uint8_t, 3>> palette;
    std::vector<std::uint8_t> idat;
    bool saw_ihdr = false;

    std::size_t pos = 8;
    while (pos + 8 <= size) {
        std::uint32_t length = read_u32(data + pos);
        if (pos + 12 + length > size) return PngError{"truncated chunk"};
        const std::uint8_t* type = data + pos + 4;
        const std::uint8_t* body = data + pos + 8;
        std::uint32_t expect_crc = read_u32(body + length);
        if (crc32_of(type, 4 + length) != expect_crc) {
            return PngError{"chunk CRC mismatch"};
        }

        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (length != 13) return PngError{"bad IHDR length"};
            width = read_u32(body);
            height = read_u32(body + 4);
            bit_depth = body[8];
            color_type = body[9];
            if (body[12] != 0) return PngError{"interlaced PNG unsupported"};
            if (width == 0 || height == 0) return PngError{"empty image"};
            bool depth_ok = bit_depth == 8 ||
                            ((color_type == 0 || color_type == 3) &&
                             (bit_depth == 1 || bit_depth == 2 || bit_depth == 4));
            if (!depth_ok) return PngError{"unsupported bit depth"};
            if (color_type != 0 && color_type != 2 && color_type != 3 &&
                color_type != 4 && color_type != 6) {
                return PngError{"unsupported color type"};
            }
            saw_ihdr = true;
        } else if (std::memcmp(type, "PLTE", 4) == 0) {
            if (length % 3 != 0) return PngError{"bad PLTE length"};
            for (std::uint32_t i = 0; i < length; i += 3) {
                palette.push_back({body[i], body[i + 1], body[i + 2]});
            }
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), body, body + length);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        pos += 12 + length;
    }
    if (!saw_ihdr) return PngError{"missing IHDR"};
    if (idat.empty()) return PngError{"missing IDAT"};
    if (color_type == 3 && palette.empty()) return PngError{"missing PLTE"};

    int channels = color_type == 2 ? 3 : color_type == 4 ? 2 : color_type == 6 ? 4 : 1;
    std::size_t bits_per_pixel =
        static_cast<std::size_t>(channels) * static_cast<std::size_t>(bit_depth);
    std::size_t row_bytes = (static_cast<std::size_t>(width) * bits_per_pixel + 7) / 8;
    std::size_t expected = (row_bytes + 1) * height;

    std::vector<std::uint8_t> raw(expected);
    uLongf raw_size = static_cast<uLongf>(expected);
    int zrc = uncompress(raw.data(), &raw_size, idat.data(),
                         static_cast<uLong>(idat.size()));
    if (zrc != Z_OK || raw_size != expected) {
        return PngError{"IDAT inflate failed"};
    }

    // Undo scanline filters in place (bpp = filter unit in bytes).
    std::size_t bpp = std::max<std::size_t>(1, bits_per_pixel / 8);
    std::vector<std::uint8_t> prev(row_bytes, 0);
    std::vector<std::uint8_t> scanlines(static_cast<std::size_t>(height) * row_bytes);
    for (std::uint32_t y = 0; y < height; ++y) {
        const std::uint8_t filter = raw[y * (row_bytes + 1)];
        const std::uint8_t* src = raw.data() + y * (row_bytes + 1) + 1;
        std::uint8_t* dst = scanlines.data() + static_cast<std::size_t>(y) * row_bytes;
        for (std::size_t x = 0; x < row_bytes; ++x) {
            int a = x >= bpp ? dst[x - bpp] : 0;
            int b = prev[x];
            int c = x >= bpp ? prev[x - bpp] : 0;
            int value = src[x];
            switch (filter) {
                case 0: break;
                case 1: value += a; break;
                case 2: value += b; break;
                case 3: value += (a + b) / 2; break;
                case 4: value += paeth(a, b, c); break;
                default: return PngError{"unknown scanline filter"};
            }
            dst[x] = static_cast<std::uint8_t>(value & 0xFF);
        }
        std::memcpy(prev.data(), dst, row_bytes);
    }

    RasterImage img;
    img.width = static_cast<int>(width);
    img.height = static_cast<int>(height);
    img.pixels.resize(static_cast<std::size_t>(width) * height);

    auto sample_bits = [&](const std::uint8_t* row, std::uint32_t x) -> int {
        // bit_depth in {1,2,4}; big-endian packing within each byte.
        int per_byte = 8 / bit_depth;
        std::uint8_t byte = row[x / per_byte];
        int shift = 8 - bit_depth * (static_cast<int>(x % per_byte) + 1);
        return (byte >> shift) & ((1 << bit_depth) - 1);
    };

    for (std::uint32_t y = 0; y < height; ++y) {
        const std::uint8_t* row = scanlines.data() + static_cast<std::size_t>(y) * row_bytes;
        std::uint8_t* out_row = img.pixels.data() + static_cast<std::size_t>(y) * width;
        for (std::uint32_t x = 0; x < width; ++x) {
            switch (color_type) {
                case 0:
                    if (bit_depth == 8) {
                        out_row[x] = row[x];
                    } else {
                        int v = sample_bits(row, x);
                        out_row[x] = static_cast<std::uint8_t>(
                            v * 255 / ((1 << bit_depth) - 1));
                    }
                    break;
                case 2:
                    out_row[x] = luma(row[3 * x], row[3 * x + 1], row[3 * x + 2]);
                    break;
                case 3: {
                    int index = bit_depth == 8 ? row[x] : sample_bits(row, x);
                    if (index >= static_cast<int>(palette.size())) {
                        return PngError{"palette index out of range"};
                    }
                    const auto& rgb = palette[static_cast<std::size_t>(index)];
                    out_row[x] = luma(rgb[0], rgb[1], rgb[2]);
                    break;
                }
                case 4:
                    out_row[x] = over_white(row[2 * x], row[2 * x + 1]);
                    break;
                case 6: {
                    std::uint8_t g = luma(row[4 * x], row[4 * x + 1], row[4 * x + 2]);
                    out_row[x] = over_white(g, row[4 * x + 3]);
                    break;
                }
                default:
                    return PngError{"unsupported color type"};
            }
        }
    }
    return img;
}

Result<RasterImage, PngError> read_png_gray(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) return PngError{"cannot open: " + path.string()};
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                    std::istreambuf_iterator<char>());
    return decode_png_gray(bytes.data(), bytes.size());
}

}  // namespace umlforge
