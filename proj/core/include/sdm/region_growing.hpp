#pragma once

#include <vector>

#include "sdm/adjacency.hpp"
#include "sdm/mesh.hpp"
#include "sdm/plane.hpp"

namespace sdm {

struct PlanarDecomposition {
  std::vector<Plane> planes;
  std::vector<int> face_to_plane;     // -1 = unassigned
  std::vector<int> unassigned_faces;  // sorted
};

struct DecomposeOptions {
  double angle_tol_deg = 5.0;
  double dist_tol_m = 0.02;
  int min_region_faces = 20;
  int refit_interval = 64;
  // An up/down-facing plane must carry at least this fraction of the total
  // projected candidate area to compete for the floor/ceiling class.
  double floor_area_fraction = 0.05;
};

// Greedy region growing seeded from the largest unassigned face. A face joins
// a region when its normal stays within angle_tol of the region plane and all
// its vertices stay within dist_tol of the running least-squares plane
// (refit every refit_interval additions). Regions below min_region_faces are
// reported unassigned. Plane classes come from the normal cone test; of the
// up-facing candidates with enough projected area only the lowest keeps the
// floor class (ceiling analogously, highest down-facing).
PlanarDecomposition decompose_planes(const TriMesh& mesh, const DecomposeOptions& options = {});

}  // namespace sdm
