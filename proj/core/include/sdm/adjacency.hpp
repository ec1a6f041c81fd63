#pragma once

#include <vector>

#include "sdm/mesh.hpp"

namespace sdm {

// Face -> faces sharing an edge. Symmetric; non-manifold edges connect all
// incident faces pairwise. Neighbor lists are sorted.
std::vector<std::vector<int>> face_adjacency(const TriMesh& mesh);

}  // namespace sdm
