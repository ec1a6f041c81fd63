#pragma once

#include "sdm/image.hpp"

namespace sdm {

enum class CannyThresholdMode {
  Absolute,    // low/high are gradient magnitudes
  Percentile,  // low/high are percentiles of the positive gradient magnitudes
};

struct CannyParams {
  double sigma_px = 1.4;
  double low = 70.0;
  double high = 90.0;
  CannyThresholdMode mode = CannyThresholdMode::Percentile;
  bool wrap_horizontal = true;  // equirect panoramas are periodic in x
};

// Classic Canny on a single-channel float image: Gaussian blur, Sobel
// gradients, 4-direction non-maximum suppression, hysteresis. Output pixels
// are 0 or 255. In percentile mode the result is invariant to affine
// rescaling of the input intensities.
ImageU8 canny(const ImageF& img, const CannyParams& params = {});

// Gaussian blur with the same border conventions as canny (horizontal wrap
// optional, vertical reflect).
ImageF gaussian_blur(const ImageF& img, double sigma_px, bool wrap_horizontal);

}  // namespace sdm
