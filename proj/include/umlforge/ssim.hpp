// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_SSIM_HPP
#define UMLFORGE_SSIM_HPP

#include "umlforge/bleu.hpp"  // MetricError
#include "umlforge/raster.hpp"
#include "umlforge/result.hpp"

namespace umlforge {

struct SsimScore {
    double value = 0.0;              // in [-1, 1]
    double mean_over_windows = 0.0;  // identical to value
};

/// Maps an image onto the fixed 512x512 comparison canvas: nearest-neighbour
/// scale so the longest side becomes 512 (aspect preserved), content anchored
/// top-left, remainder white.
RasterImage canonicalize_for_ssim(const RasterImage& image);

/// Mean local SSIM over the canonicalized pair: 11x11 Gaussian window with
/// sigma 1.5, stride 1, C1=(0.01*255)^2, C2=(0.03*255)^2.
Result<SsimScore, MetricError> ssim(const RasterImage& x, const RasterImage& y);

}  // namespace umlforge

#endif
