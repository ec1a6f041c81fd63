#include "sdm/adjacency.hpp"

#include <algorithm>
#include <map>

namespace sdm {

std::vector<std::vector<int>> face_adjacency(const TriMesh& mesh) {
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& t = mesh.faces[f];
    for (int k = 0; k < 3; ++k) {
      auto key = std::minmax(t[k], t[(k + 1) % 3]);
      edge_faces[{key.first, key.second}].push_back(static_cast<int>(f));
    }
  }
  std::vector<std::vector<int>> adj(mesh.faces.size());
  for (const auto& [edge, faces] : edge_faces) {
    for (size_t i = 0; i < faces.size(); ++i) {
      for (size_t j = i + 1; j < faces.size(); ++j) {
        adj[faces[i]].push_back(faces[j]);
        adj[faces[j]].push_back(faces[i]);
      }
    }
  }
  for (auto& neighbors : adj) {
    std::sort(neighbors.begin(), neighbors.end());
    neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
  }
  return adj;
}

}  // namespace sdm
