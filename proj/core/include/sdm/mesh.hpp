#pragma once

#include <array>
#include <string>
#include <vector>

#include "sdm/types.hpp"

namespace sdm {

// Faces with area below this are rejected as degenerate (m^2).
inline constexpr double kDegenerateFaceArea = 1e-12;

// Indexed triangle mesh in world frame, +Z up, meters.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;

  // Optional per-face attributes; either empty or sized like `faces`.
  std::vector<FaceLabel> face_labels;
  std::vector<int> face_plane;  // plane ID, -1 = unassigned

  // Optional texture: per-face UV triples into an atlas image.
  std::vector<std::array<Vec2, 3>> face_uvs;
  std::string atlas_path;

  size_t vertex_count() const { return vertices.size(); }
  size_t face_count() const { return faces.size(); }
  bool has_labels() const { return !face_labels.empty(); }
  bool has_planes() const { return !face_plane.empty(); }
  bool has_uvs() const { return !face_uvs.empty(); }

  Vec3 face_normal(int f) const;          // unit; (0,0,0) for degenerate
  Vec3 face_centroid(int f) const;
  double face_area(int f) const;
  double surface_area() const;

  // Throws ValidationError when an invariant is broken (bad indices,
  // non-finite coordinates, degenerate faces, attribute length mismatch).
  void validate() const;
};

// Directed half edge (a -> b) as it appears inside a face.
struct MeshEdge {
  int a = 0;
  int b = 0;
  bool operator==(const MeshEdge&) const = default;
};

// Edges with exactly one incident face.
std::vector<MeshEdge> boundary_edges(const TriMesh& mesh);

// Drops vertices not referenced by any face and remaps face indices.
// Returns old-vertex -> new-vertex mapping (-1 when dropped).
std::vector<int> compact_vertices(TriMesh& mesh);

// Appends `other` into `mesh` (vertices re-indexed, labels carried over).
void append_mesh(TriMesh& mesh, const TriMesh& other);

// --- primitive builders (used by fixtures and the synthetic benchmark) ---

// Closed axis-aligned room interior: floor z=0, ceiling z=height, normals
// pointing inward. Two triangles per side.
TriMesh make_room_box(double width, double depth, double height);

// Closed box with outward normals, centered at `center`, rotated by yaw (rad)
// about +Z. size = full extents.
TriMesh make_box(const Vec3& center, const Vec3& size, double yaw = 0.0);

// Closed cylinder with outward normals; `center` is the base-circle center.
TriMesh make_cylinder(const Vec3& center, double radius, double height, int segments = 24);

}  // namespace sdm
