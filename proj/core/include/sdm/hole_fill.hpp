#pragma once

#include <string>
#include <vector>

#include "sdm/mesh.hpp"
#include "sdm/region_growing.hpp"

namespace sdm {

struct HoleFillOptions {
  double snap_radius_m = 0.5;    // max vertex distance to a structural plane
  double junction_tol_m = 0.02;  // vertex counts as on-junction within this
};

struct OpenLoop {
  int loop = -1;
  std::string reason;
};

struct HoleFillResult {
  TriMesh mesh;                    // input + fill faces, rim vertices snapped
  std::vector<int> filled_faces;   // face ids in `mesh`
  std::vector<int> plane_of_filled;
  std::vector<OpenLoop> open_loops;
};

// Fills hole loops by plane extension: every loop vertex snaps onto its
// nearest structural plane (floor/wall/ceiling), multi-plane loops are split
// along the planes' intersection (inserting the junction segment, and the
// triple corner point for three-plane loops), and each planar part is ear
// clipped in plane coordinates. Fill vertices land exactly on their plane.
// Loops touching more than three planes, no structural plane, or an
// untriangulatable junction topology stay open and are reported.
HoleFillResult fill_holes_plane_extension(const TriMesh& mesh,
                                          const std::vector<std::vector<int>>& loops,
                                          const PlanarDecomposition& decomp,
                                          const HoleFillOptions& options = {});

// Ear clipping of a polygon with optional hole rings (indices into `points`).
// The outer ring may wind either way; triangles follow its winding. Hole
// rings are bridged into the outer ring first. Throws DegenerateInput when no
// valid ear exists.
std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& points,
                                         const std::vector<int>& outer,
                                         const std::vector<std::vector<int>>& holes = {});

// Even-odd point-in-polygon test.
bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& points,
                      const std::vector<int>& ring);

}  // namespace sdm
