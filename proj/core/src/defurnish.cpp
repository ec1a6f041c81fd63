#include "sdm/defurnish.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sdm/adjacency.hpp"

namespace sdm {

DefurnishResult remove_furniture_faces(const TriMesh& mesh, std::span<const FaceLabel> labels) {
  if (labels.size() != mesh.face_count()) {
    throw MismatchedInput("remove_furniture_faces: labels length != face count");
  }
  DefurnishResult out;
  out.face_map.assign(mesh.face_count(), -1);

  // Boundary edges already present in the input are not holes we created.
  std::set<std::pair<int, int>> input_boundary;
  for (const MeshEdge& e : boundary_edges(mesh)) {
    auto key = std::minmax(e.a, e.b);
    input_boundary.insert({key.first, key.second});
  }

  out.mesh.vertices = mesh.vertices;
  for (size_t f = 0; f < mesh.face_count(); ++f) {
    if (labels[f] == FaceLabel::Furniture) {
      out.removed_faces.push_back(static_cast<int>(f));
      continue;
    }
    out.face_map[f] = static_cast<int>(out.mesh.faces.size());
    out.mesh.faces.push_back(mesh.faces[f]);
    if (mesh.has_labels()) out.mesh.face_labels.push_back(mesh.face_labels[f]);
    if (mesh.has_uvs()) out.mesh.face_uvs.push_back(mesh.face_uvs[f]);
  }
  out.mesh.atlas_path = mesh.atlas_path;

  std::vector<int> vertex_map_old_space = compact_vertices(out.mesh);
  out.vertex_map = std::move(vertex_map_old_space);

  // New boundary edges, directed as they appear in their surviving face.
  std::vector<MeshEdge> new_boundary = boundary_edges(out.mesh);
  std::set<std::pair<int, int>> input_boundary_mapped;
  for (const auto& [a, b] : input_boundary) {
    int na = a < static_cast<int>(out.vertex_map.size()) ? out.vertex_map[a] : -1;
    int nb = b < static_cast<int>(out.vertex_map.size()) ? out.vertex_map[b] : -1;
    if (na >= 0 && nb >= 0) {
      auto key = std::minmax(na, nb);
      input_boundary_mapped.insert({key.first, key.second});
    }
  }

  // tail vertex -> outgoing directed hole edges, target-sorted for
  // deterministic chaining at pinch vertices.
  std::map<int, std::vector<int>> outgoing;
  std::vector<MeshEdge> hole_edges;
  for (const MeshEdge& e : new_boundary) {
    auto key = std::minmax(e.a, e.b);
    if (input_boundary_mapped.count({key.first, key.second})) continue;
    outgoing[e.a].push_back(static_cast<int>(hole_edges.size()));
    hole_edges.push_back(e);
  }
  for (auto& [v, edges] : outgoing) {
    std::sort(edges.begin(), edges.end(),
              [&](int x, int y) { return hole_edges[x].b < hole_edges[y].b; });
  }

  std::vector<char> used(hole_edges.size(), 0);
  for (size_t start = 0; start < hole_edges.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> loop;
    int cursor = static_cast<int>(start);
    bool closed = false;
    while (true) {
      used[cursor] = 1;
      loop.push_back(hole_edges[cursor].a);
      int tail = hole_edges[cursor].b;
      if (tail == hole_edges[start].a) {
        closed = true;
        break;
      }
      auto it = outgoing.find(tail);
      int next = -1;
      if (it != outgoing.end()) {
        for (int cand : it->second) {
          if (!used[cand]) {
            next = cand;
            break;
          }
        }
      }
      if (next < 0) break;  // open chain (hole merged with pre-existing boundary)
      cursor = next;
    }
    if (closed && loop.size() >= 3) out.boundary_loops.push_back(std::move(loop));
  }
  return out;
}

std::vector<FaceLabel> propagate_labels_by_component(const TriMesh& mesh,
                                                     std::span<const FaceLabel> labels) {
  if (labels.size() != mesh.face_count()) {
    throw MismatchedInput("propagate_labels_by_component: labels length != face count");
  }
  const auto adjacency = face_adjacency(mesh);
  const int nf = static_cast<int>(mesh.face_count());
  std::vector<int> component(nf, -1);
  std::vector<FaceLabel> out(labels.begin(), labels.end());

  int n_components = 0;
  std::vector<int> stack;
  for (int f = 0; f < nf; ++f) {
    if (component[f] >= 0) continue;
    int id = n_components++;
    stack.push_back(f);
    component[f] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nb : adjacency[cur]) {
        if (component[nb] < 0) {
          component[nb] = id;
          stack.push_back(nb);
        }
      }
    }
  }

  std::vector<double> furniture_area(n_components, 0.0), structure_area(n_components, 0.0);
  for (int f = 0; f < nf; ++f) {
    double a = mesh.face_area(f);
    if (labels[f] == FaceLabel::Furniture) furniture_area[component[f]] += a;
    if (labels[f] == FaceLabel::Structure) structure_area[component[f]] += a;
  }
  for (int f = 0; f < nf; ++f) {
    if (labels[f] != FaceLabel::Unknown) continue;
    int c = component[f];
    if (furniture_area[c] == 0.0 && structure_area[c] == 0.0) continue;
    out[f] = furniture_area[c] > structure_area[c] ? FaceLabel::Furniture : FaceLabel::Structure;
  }
  return out;
}

}  // namespace sdm
