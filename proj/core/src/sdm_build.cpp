#include "sdm/sdm_build.hpp"

#include <algorithm>

#include "sdm/bvh.hpp"

namespace sdm {

SdmResult build_sdm(const TriMesh& mesh, std::span<const double> face_scores,
                    const SdmConfig& config) {
  mesh.validate();
  if (face_scores.size() != mesh.face_count()) {
    throw MismatchedInput("build_sdm: score length != face count");
  }

  SdmResult result;
  result.decomposition = decompose_planes(mesh, config.decompose);

  std::vector<FaceLabel> labels(mesh.face_count());
  for (size_t f = 0; f < labels.size(); ++f) {
    if (face_scores[f] == kUnobservedScore) {
      labels[f] = FaceLabel::Unknown;
    } else {
      labels[f] = face_scores[f] > config.label_threshold ? FaceLabel::Furniture
                                                          : FaceLabel::Structure;
    }
  }
  // Occluded faces (e.g. the underside of a box) inherit their component's
  // majority so furniture bodies are removed whole.
  labels = propagate_labels_by_component(mesh, labels);

  DefurnishResult removal = remove_furniture_faces(mesh, labels);
  result.removed_faces = removal.removed_faces;

  // Carry plane assignments across the face remap.
  removal.mesh.face_plane.assign(removal.mesh.face_count(), -1);
  for (size_t f = 0; f < mesh.face_count(); ++f) {
    int nf = removal.face_map[f];
    if (nf >= 0) removal.mesh.face_plane[nf] = result.decomposition.face_to_plane[f];
  }

  HoleFillOptions fill_options;
  fill_options.snap_radius_m = config.plane_snap_radius_m;
  fill_options.junction_tol_m = config.decompose.dist_tol_m;
  HoleFillResult fill = fill_holes_plane_extension(removal.mesh, removal.boundary_loops,
                                                   result.decomposition, fill_options);
  result.mesh = std::move(fill.mesh);
  result.filled_faces = std::move(fill.filled_faces);
  result.plane_of_filled = std::move(fill.plane_of_filled);
  result.open_loops = std::move(fill.open_loops);

  result.mesh.face_plane.resize(result.mesh.face_count(), -1);
  for (size_t i = 0; i < result.filled_faces.size(); ++i) {
    result.mesh.face_plane[result.filled_faces[i]] = result.plane_of_filled[i];
  }

  if (config.preserve_openings && !config.pano_positions.empty() &&
      !result.filled_faces.empty()) {
    Bvh input_bvh(mesh);
    std::vector<char> reopen(result.mesh.face_count(), 0);
    for (size_t i = 0; i < result.filled_faces.size(); ++i) {
      int face = result.filled_faces[i];
      int plane_id = result.plane_of_filled[i];
      if (plane_id < 0 ||
          result.decomposition.planes[plane_id].cls != PlaneClass::Wall) {
        continue;
      }
      Vec3 target = result.mesh.face_centroid(face);
      int see_through = 0;
      for (const Vec3& origin : config.pano_positions) {
        Vec3 to_target = target - origin;
        double dist = to_target.norm();
        if (dist < 1e-9) continue;
        RayHit hit = input_bvh.raycast(origin, to_target / dist);
        // The input mesh must have had a surface near the patch; otherwise
        // this ray looked straight through (an opening).
        if (!hit.hit() || hit.t > dist + config.opening_slack_m) ++see_through;
      }
      if (see_through >= config.opening_min_views) reopen[face] = 1;
    }
    bool any = std::find(reopen.begin(), reopen.end(), 1) != reopen.end();
    if (any) {
      TriMesh pruned;
      pruned.vertices = result.mesh.vertices;
      pruned.atlas_path = result.mesh.atlas_path;
      std::vector<int> face_remap(result.mesh.face_count(), -1);
      for (size_t f = 0; f < result.mesh.face_count(); ++f) {
        if (reopen[f]) continue;
        face_remap[f] = static_cast<int>(pruned.faces.size());
        pruned.faces.push_back(result.mesh.faces[f]);
        if (result.mesh.has_labels()) pruned.face_labels.push_back(result.mesh.face_labels[f]);
        if (result.mesh.has_planes()) pruned.face_plane.push_back(result.mesh.face_plane[f]);
        if (result.mesh.has_uvs()) pruned.face_uvs.push_back(result.mesh.face_uvs[f]);
      }
      compact_vertices(pruned);
      std::vector<int> filled_kept;
      std::vector<int> plane_kept;
      for (size_t i = 0; i < result.filled_faces.size(); ++i) {
        int nf = face_remap[result.filled_faces[i]];
        if (nf >= 0) {
          filled_kept.push_back(nf);
          plane_kept.push_back(result.plane_of_filled[i]);
        } else {
          result.reopened_faces.push_back(result.filled_faces[i]);
        }
      }
      result.mesh = std::move(pruned);
      result.filled_faces = std::move(filled_kept);
      result.plane_of_filled = std::move(plane_kept);
    }
  }

  result.boundary_edge_count = static_cast<int>(boundary_edges(result.mesh).size());
  return result;
}

}  // namespace sdm
