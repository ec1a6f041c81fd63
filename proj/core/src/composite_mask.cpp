#include "sdm/composite_mask.hpp"

#include <cmath>

#include "sdm/rng.hpp"

namespace sdm {

ImageU8 generate_composite_mask(const EquirectCamera& cam, const MaskSpec& spec) {
  cam.validate();
  spec.validate();
  Rng rng(spec.seed);
  const int w = cam.width, h = cam.height;
  const double min_dim = std::min(w, h);
  ImageU8 mask(w, h, 1, 0);

  const std::int64_t k = rng.uniform_int(spec.n_circles_lo, spec.n_circles_hi);
  for (std::int64_t i = 0; i < k; ++i) {
    const double cx = rng.uniform(0.0, static_cast<double>(w));
    const double cy = rng.uniform(0.0, static_cast<double>(h));
    const double r = rng.uniform(spec.radius_frac_lo, spec.radius_frac_hi) * min_dim;
    const double r2 = r * r;
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - r - 1)));
    const int x1 = std::min(w - 1, static_cast<int>(std::ceil(cx + r + 1)));
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - r - 1)));
    const int y1 = std::min(h - 1, static_cast<int>(std::ceil(cy + r + 1)));
    for (int y = y0; y <= y1; ++y) {
      const double dy = (y + 0.5) - cy;
      for (int x = x0; x <= x1; ++x) {
        const double dx = (x + 0.5) - cx;
        if (dx * dx + dy * dy <= r2) mask.at(x, y) = 255;
      }
    }
  }
  return mask;
}

}  // namespace sdm
