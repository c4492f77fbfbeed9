// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/ssim.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace umlforge {

namespace {

constexpr int kCanvas = 512;
constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr int kValid = kCanvas - kWindow + 1;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::vector<double> gaussian_kernel() {
    std::vector<double> k(kWindow);
    double sum = 0.0;
    for (int i = 0; i < kWindow; ++i) {
        double d = i - (kWindow - 1) / 2;
        k[static_cast<std::size_t>(i)] = std::exp(-(d * d) / (2.0 * kSigma * kSigma));
        sum += k[static_cast<std::size_t>(i)];
    }
    for (double& v : k) v /= sum;
    return k;
}

/// Separable valid-mode convolution from a kCanvas x kCanvas plane down to
/// kValid x kValid.
std::vector<double> convolve(const std::vector<double>& plane,
                             const std::vector<double>& kernel) {
    std::vector<double> horizontal(static_cast<std::size_t>(kCanvas) * kValid);
    for (int y = 0; y < kCanvas; ++y) {
        const double* row = plane.data() + static_cast<std::size_t>(y) * kCanvas;
        double* out = horizontal.data() + static_cast<std::size_t>(y) * kValid;
        for (int x = 0; x < kValid; ++x) {
            double acc = 0.0;
            for (int i = 0; i < kWindow; ++i) {
                acc += kernel[static_cast<std::size_t>(i)] * row[x + i];
            }
            out[x] = acc;
        }
    }
    std::vector<double> result(static_cast<std::size_t>(kValid) * kValid);
    for (int y = 0; y < kValid; ++y) {
        double* out = result.data() + static_cast<std::size_t>(y) * kValid;
        for (int x = 0; x < kValid; ++x) {
            double acc = 0.0;
            for (int i = 0; i < kWindow; ++i) {
                acc += kernel[static_cast<std::size_t>(i)] *
                       horizontal[static_cast<std::size_t>(y + i) * kValid + x];
            }
            out[x] = acc;
        }
    }
    return result;
}

}  // namespace

RasterImage canonicalize_for_ssim(const RasterImage& image) {
    RasterImage out = RasterImage::filled(kCanvas, kCanvas, 255);
    const std::int64_t longest = std::max(image.width, image.height);
    for (int y = 0; y < kCanvas; ++y) {
        std::int64_t sy = y * longest / kCanvas;
        for (int x = 0; x < kCanvas; ++x) {
            std::int64_t sx = x * longest / kCanvas;
            if (sx < image.width && sy < image.height) {
                out.pixels[static_cast<std::size_t>(y) * kCanvas + x] =
                    image.at(static_cast<int>(sx), static_cast<int>(sy));
            }
        }
    }
    return out;
}

Result<SsimScore, MetricError> ssim(const RasterImage& x, const RasterImage& y) {
    auto degenerate = [](const RasterImage& img) {
        return img.width < 1 || img.height < 1 ||
               img.pixels.size() != static_cast<std::size_t>(img.width) *
                                        static_cast<std::size_t>(img.height);
    };
    if (degenerate(x) || degenerate(y)) return MetricError{"degenerate image"};

    RasterImage cx = canonicalize_for_ssim(x);
    RasterImage cy = canonicalize_for_ssim(y);

    const std::size_t n = static_cast<std::size_t>(kCanvas) * kCanvas;
    std::vector<double> px(n), py(n), pxx(n), pyy(n), pxy(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = cx.pixels[i];
        double b = cy.pixels[i];
        px[i] = a;
        py[i] = b;
        pxx[i] = a * a;
        pyy[i] = b * b;
        pxy[i] = a * b;
    }

    const std::vector<double> kernel = gaussian_kernel();
    std::vector<double> mu_x = convolve(px, kernel);
    std::vector<double> mu_y = convolve(py, kernel);
    std::vector<double> e_xx = convolve(pxx, kernel);
    std::vector<double> e_yy = convolve(pyy, kernel);
    std::vector<double> e_xy = convolve(pxy, kernel);

    double sum = 0.0;
    const std::size_t windows = static_cast<std::size_t>(kValid) * kValid;
    for (std::size_t i = 0; i < windows; ++i) {
        double mx = mu_x[i];
        double my = mu_y[i];
        double var_x = e_xx[i] - mx * mx;
        double var_y = e_yy[i] - my * my;
        double cov = e_xy[i] - mx * my;
        double numerator = (2.0 * mx * my + kC1) * (2.0 * cov + kC2);
        double denominator = (mx * mx + my * my + kC1) * (var_x + var_y + kC2);
        sum += numerator / denominator;
    }

    SsimScore score;
    score.value = sum / static_cast<double>(windows);
    score.mean_over_windows = score.value;
    return score;
}

}  // namespace umlforge
