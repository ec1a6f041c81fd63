#pragma once

#include <span>
#include <vector>

#include "sdm/mesh.hpp"

namespace sdm {

struct DefurnishResult {
  TriMesh mesh;                    // furniture faces removed, vertices compacted
  std::vector<int> removed_faces;  // input face ids, sorted
  std::vector<int> face_map;       // input face id -> output face id, -1 removed
  std::vector<int> vertex_map;     // input vertex id -> output vertex id, -1 pruned
  // Each hole as an ordered cycle of output-mesh vertex ids, chained along the
  // directed boundary edges of the surviving faces. Fill triangles must wind
  // opposite to this order to match the surrounding surface orientation.
  std::vector<std::vector<int>> boundary_loops;
};

// Deletes every Furniture face, prunes orphaned vertices, and extracts the
// newly created hole loops (boundary edges absent from the input mesh).
DefurnishResult remove_furniture_faces(const TriMesh& mesh, std::span<const FaceLabel> labels);

// Rewrites Unknown labels with the area-weighted majority of observed labels
// in the face's edge-connected component. Components with no observed face
// keep Unknown.
std::vector<FaceLabel> propagate_labels_by_component(const TriMesh& mesh,
                                                     std::span<const FaceLabel> labels);

}  // namespace sdm
