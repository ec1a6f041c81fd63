#pragma once

#include <vector>

#include "sdm/bvh.hpp"
#include "sdm/camera.hpp"
#include "sdm/mesh.hpp"

namespace sdm {

// Score sentinel for faces never hit by any mask pixel.
inline constexpr double kUnobservedScore = -1.0;

struct MaskProjection {
  std::vector<double> scores;      // in [0,1], or kUnobservedScore
  std::vector<FaceLabel> labels;   // furniture iff score > 0.5; unknown if unobserved
};

struct MaskProjectionOptions {
  double min_depth_m = 0.5;   // weight clamp: w = 1 / max(depth, min_depth_m)
  double threshold = 0.5;     // furniture iff score > threshold
  int erode_px = 0;           // optional mask erosion to counter bleeding
  int threads = 0;
};

// Projects binary furniture masks onto mesh faces. Every mask pixel votes for
// the front-most face its ray hits, weighted by inverse clamped depth; the
// per-face score is the weighted mean vote over all panoramas. Exact duplicate
// panoramas (same pose and mask) are counted once.
MaskProjection project_masks_to_faces(const TriMesh& mesh, const std::vector<MaskPano>& masks,
                                      const MaskProjectionOptions& options = {});

}  // namespace sdm
