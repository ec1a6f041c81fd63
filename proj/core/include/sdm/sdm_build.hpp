#pragma once

#include <span>
#include <vector>

#include "sdm/defurnish.hpp"
#include "sdm/hole_fill.hpp"
#include "sdm/mask_projection.hpp"
#include "sdm/region_growing.hpp"

namespace sdm {

struct SdmConfig {
  DecomposeOptions decompose;
  double label_threshold = 0.5;
  double plane_snap_radius_m = 0.5;

  // Opening preservation: a filled wall face is deleted again when rays from
  // at least `opening_min_views` panorama centers pass through its location
  // in the input mesh (no input surface within `opening_slack_m` of the
  // patch), i.e. the fill would cover a see-through opening such as a doorway.
  bool preserve_openings = true;
  std::vector<Vec3> pano_positions;
  double opening_slack_m = 0.05;
  int opening_min_views = 2;
};

struct SdmResult {
  TriMesh mesh;                      // the simplified defurnished mesh
  PlanarDecomposition decomposition; // on the input mesh
  std::vector<int> removed_faces;    // input-mesh face ids
  std::vector<int> filled_faces;     // output-mesh face ids
  std::vector<int> plane_of_filled;  // parallel to filled_faces
  std::vector<OpenLoop> open_loops;
  std::vector<int> reopened_faces;   // fills deleted by opening preservation
  int boundary_edge_count = 0;       // 0 = watertight
};

// Full SDM generation: planar decomposition, score thresholding (with
// component-majority completion of unobserved faces), furniture removal,
// plane-extension hole filling, and opening preservation.
SdmResult build_sdm(const TriMesh& mesh, std::span<const double> face_scores,
                    const SdmConfig& config = {});

}  // namespace sdm
