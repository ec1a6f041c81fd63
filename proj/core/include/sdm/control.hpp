#pragma once

#include "sdm/camera.hpp"
#include "sdm/canny.hpp"

namespace sdm {

enum class ControlSource : std::uint8_t { Depth, Normal, Combined };

// Binary edge map guiding the inpainter, aligned to one panorama.
struct ControlImage {
  ImageU8 edges;  // {0,255}, pano resolution
  ControlSource source = ControlSource::Combined;
};

struct ControlParams {
  CannyParams canny;
  // No-hit depth is replaced by this factor times the 99th-percentile finite
  // depth so open doorways still produce edges.
  double infinity_factor = 1.05;
  double robust_lo_pct = 1.0;
  double robust_hi_pct = 99.0;
};

// Union of Canny edges from the normalized depth image and each normal
// channel. Frames must share camera and pose.
ControlImage make_control_image(const DepthPano& depth, const NormalPano& normal,
                                const ControlParams& params = {});

// Depth normalization used by make_control_image: +inf replaced, then scaled
// to [0,1] by the robust percentile range.
ImageF normalize_depth(const ImageF& depth, const ControlParams& params = {});

}  // namespace sdm
