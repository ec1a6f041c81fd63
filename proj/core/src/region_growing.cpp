#include "sdm/region_growing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace sdm {

namespace {

struct RegionState {
  std::vector<int> faces;
  std::vector<int> vertices;  // unique vertex ids
  std::vector<Vec3> face_normals;
  PlaneFitAccumulator acc;
};

Plane fit_region(const RegionState& region, const TriMesh& mesh) {
  PlaneFitAccumulator acc;
  for (int v : region.vertices) acc.add(mesh.vertices[v]);
  return acc.fit(region.face_normals);
}

bool face_within(const TriMesh& mesh, int face, const Plane& plane, double dist_tol) {
  for (int v : mesh.faces[face]) {
    if (plane.distance(mesh.vertices[v]) > dist_tol) return false;
  }
  return true;
}

}  // namespace

PlanarDecomposition decompose_planes(const TriMesh& mesh, const DecomposeOptions& options) {
  mesh.validate();
  const int nf = static_cast<int>(mesh.face_count());
  PlanarDecomposition out;
  out.face_to_plane.assign(nf, -1);
  if (nf == 0) return out;

  const double cos_tol = std::cos(options.angle_tol_deg * M_PI / 180.0);
  const auto adjacency = face_adjacency(mesh);

  std::vector<Vec3> normals(nf);
  std::vector<double> areas(nf);
  for (int f = 0; f < nf; ++f) {
    normals[f] = mesh.face_normal(f);
    areas[f] = mesh.face_area(f);
  }

  std::vector<int> seed_order(nf);
  std::iota(seed_order.begin(), seed_order.end(), 0);
  std::sort(seed_order.begin(), seed_order.end(), [&](int a, int b) {
    if (areas[a] != areas[b]) return areas[a] > areas[b];
    return a < b;
  });

  // claimed: -1 free, otherwise the region id that owns the face. Faces of
  // discarded (too small) regions stay claimed so seeds do not loop.
  std::vector<int> claimed(nf, -1);
  std::vector<int> vertex_stamp(mesh.vertex_count(), -1);
  std::vector<int> in_queue_stamp(nf, -1);
  int region_id = 0;

  for (int seed : seed_order) {
    if (claimed[seed] >= 0) continue;
    RegionState region;
    auto add_face = [&](int f) {
      claimed[f] = region_id;
      region.faces.push_back(f);
      region.face_normals.push_back(normals[f]);
      for (int v : mesh.faces[f]) {
        if (vertex_stamp[v] != region_id) {
          vertex_stamp[v] = region_id;
          region.vertices.push_back(v);
          region.acc.add(mesh.vertices[v]);
        }
      }
    };

    Plane plane;
    plane.normal = normals[seed];
    plane.offset = normals[seed].dot(mesh.face_centroid(seed));
    add_face(seed);

    std::deque<int> queue;
    auto push_neighbors = [&](int f) {
      for (int nb : adjacency[f]) {
        if (claimed[nb] < 0 && in_queue_stamp[nb] != region_id) {
          in_queue_stamp[nb] = region_id;
          queue.push_back(nb);
        }
      }
    };
    push_neighbors(seed);

    int since_refit = 0;
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      if (claimed[f] >= 0) continue;
      if (normals[f].dot(plane.normal) < cos_tol) continue;
      if (!face_within(mesh, f, plane, options.dist_tol_m)) continue;
      add_face(f);
      push_neighbors(f);
      if (++since_refit >= options.refit_interval) {
        since_refit = 0;
        plane = region.acc.fit(region.face_normals);
      }
    }

    if (static_cast<int>(region.faces.size()) < options.min_region_faces) {
      // Too small: faces stay claimed but unassigned.
      ++region_id;
      continue;
    }

    // Final refit; evict faces pushed outside the tolerance by the refit so
    // the assignment invariant holds exactly.
    for (int pass = 0; pass < 3 && region.faces.size() >= 3; ++pass) {
      Plane refit = fit_region(region, mesh);
      std::vector<int> keep;
      keep.reserve(region.faces.size());
      for (int f : region.faces) {
        if (face_within(mesh, f, refit, options.dist_tol_m)) keep.push_back(f);
      }
      plane = refit;
      if (keep.size() == region.faces.size()) break;
      RegionState next;
      ++region_id;  // fresh vertex stamp space
      for (int f : keep) {
        next.faces.push_back(f);
        next.face_normals.push_back(normals[f]);
        for (int v : mesh.faces[f]) {
          if (vertex_stamp[v] != region_id) {
            vertex_stamp[v] = region_id;
            next.vertices.push_back(v);
          }
        }
      }
      for (int f : region.faces) claimed[f] = -2;  // evicted placeholder
      for (int f : next.faces) claimed[f] = region_id;
      region = std::move(next);
    }

    if (static_cast<int>(region.faces.size()) < std::max(options.min_region_faces, 1)) {
      ++region_id;
      continue;
    }

    int plane_id = static_cast<int>(out.planes.size());
    plane.cls = classify_plane_normal(plane.normal);
    plane.inlier_faces = region.faces;
    std::sort(plane.inlier_faces.begin(), plane.inlier_faces.end());
    for (int f : plane.inlier_faces) out.face_to_plane[f] = plane_id;
    out.planes.push_back(std::move(plane));
    ++region_id;
  }

  // Lowest-floor / highest-ceiling selection among candidates with enough
  // projected area; losers fall back to Other.
  auto select_extreme = [&](PlaneClass cls, bool pick_lowest) {
    std::vector<int> candidates;
    std::vector<double> projected, height;
    double total = 0.0;
    for (size_t p = 0; p < out.planes.size(); ++p) {
      if (out.planes[p].cls != cls) continue;
      double area = 0.0;
      double zsum = 0.0, wsum = 0.0;
      for (int f : out.planes[p].inlier_faces) {
        area += areas[f] * std::abs(normals[f].z());
        zsum += mesh.face_centroid(f).z() * areas[f];
        wsum += areas[f];
      }
      candidates.push_back(static_cast<int>(p));
      projected.push_back(area);
      height.push_back(wsum > 0 ? zsum / wsum : 0.0);
      total += area;
    }
    if (candidates.empty()) return;
    int best = -1;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (projected[i] < options.floor_area_fraction * total) continue;
      if (best < 0 || (pick_lowest ? height[i] < height[best] : height[i] > height[best])) {
        best = static_cast<int>(i);
      }
    }
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (static_cast<int>(i) != best) out.planes[candidates[i]].cls = PlaneClass::Other;
    }
  };
  select_extreme(PlaneClass::Floor, /*pick_lowest=*/true);
  select_extreme(PlaneClass::Ceiling, /*pick_lowest=*/false);

  for (int f = 0; f < nf; ++f) {
    if (out.face_to_plane[f] < 0) out.unassigned_faces.push_back(f);
  }
  return out;
}

}  // namespace sdm
