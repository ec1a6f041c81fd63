#pragma once

#include <cstdint>

#include "sdm/camera.hpp"
#include "sdm/image.hpp"

namespace sdm {

// Random-circle composite mask spec. All draws come from the seeded generator
// in a fixed order (count, then per circle: center x, center y, radius), so a
// given spec is byte-reproducible across runs and platforms.
struct MaskSpec {
  int n_circles_lo = 1;
  int n_circles_hi = 10;
  double radius_frac_lo = 0.05;   // fraction of min(width, height)
  double radius_frac_hi = 0.25;
  std::uint64_t seed = 0;

  void validate() const {
    if (n_circles_lo < 1 || n_circles_hi < n_circles_lo) {
      throw ValidationError("mask spec: need 1 <= lo <= hi circles");
    }
    if (!(radius_frac_lo > 0.0) || radius_frac_lo > radius_frac_hi || radius_frac_hi > 0.5) {
      throw ValidationError("mask spec: need 0 < radius lo <= hi <= 0.5");
    }
  }
};

// Union of filled discs rasterized with pixel-center coverage.
ImageU8 generate_composite_mask(const EquirectCamera& cam, const MaskSpec& spec);

}  // namespace sdm
