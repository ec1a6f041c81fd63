#pragma once

#include <functional>

#include "sdm/bvh.hpp"
#include "sdm/camera.hpp"
#include "sdm/mesh.hpp"

namespace sdm {

struct GeometryRender {
  DepthPano depth;            // ray length, +inf where no hit
  NormalPano normal;          // face normal flipped toward the ray origin
  ImageI32 face_id;           // -1 where no hit
};

inline constexpr std::int32_t kNoFace = -1;

// Per-pixel nearest-hit ray cast of the mesh. Rows are rendered in parallel;
// output is independent of the thread count.
GeometryRender render_geometry(const TriMesh& mesh, const Bvh& bvh, const EquirectCamera& cam,
                               const Pose& pose, int threads = 0);
GeometryRender render_geometry(const TriMesh& mesh, const EquirectCamera& cam, const Pose& pose,
                               int threads = 0);

// Runs fn(row) for row in [0, rows) on a fixed-size pool. Rows are disjoint
// work items so results never depend on scheduling.
void parallel_rows(int rows, int threads, const std::function<void(int)>& fn);

}  // namespace sdm
