#include "sdm/control.hpp"

#include <cmath>

namespace sdm {

ImageF normalize_depth(const ImageF& depth, const ControlParams& params) {
  std::vector<double> finite;
  finite.reserve(depth.data.size());
  for (float v : depth.data) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  ImageF out(depth.width, depth.height, 1, 0.0f);
  if (finite.empty()) return out;  // nothing visible
  double p99 = percentile(finite, 99.0);
  double sentinel = params.infinity_factor * p99;
  double lo = percentile(finite, params.robust_lo_pct);
  double hi = std::max(percentile(finite, params.robust_hi_pct), sentinel);
  double range = hi - lo;
  if (range <= 0.0) return out;
  for (size_t i = 0; i < depth.data.size(); ++i) {
    double v = std::isfinite(depth.data[i]) ? depth.data[i] : sentinel;
    out.data[i] = static_cast<float>(std::clamp((v - lo) / range, 0.0, 1.0));
  }
  return out;
}

ControlImage make_control_image(const DepthPano& depth, const NormalPano& normal,
                                const ControlParams& params) {
  if (depth.camera.width != normal.camera.width || depth.camera.height != normal.camera.height ||
      (depth.pose.position - normal.pose.position).norm() > 1e-12 ||
      std::abs(std::abs(depth.pose.rotation.dot(normal.pose.rotation)) - 1.0) > 1e-12) {
    throw MismatchedInput("make_control_image: depth and normal frames disagree");
  }
  if (depth.image.channels != 1 || normal.image.channels != 3) {
    throw MismatchedInput("make_control_image: wrong channel counts");
  }

  ControlImage control;
  control.source = ControlSource::Combined;
  control.edges = ImageU8(depth.image.width, depth.image.height, 1, 0);

  auto merge = [&](const ImageU8& e) {
    for (size_t i = 0; i < e.data.size(); ++i) {
      if (e.data[i]) control.edges.data[i] = 255;
    }
  };

  merge(canny(normalize_depth(depth.image, params), params.canny));
  for (int c = 0; c < 3; ++c) {
    ImageF channel(normal.image.width, normal.image.height, 1);
    for (int y = 0; y < channel.height; ++y) {
      for (int x = 0; x < channel.width; ++x) {
        channel.at(x, y) = normal.image.at(x, y, c);
      }
    }
    merge(canny(channel, params.canny));
  }
  return control;
}

}  // namespace sdm
