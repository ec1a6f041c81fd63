#pragma once

#include <limits>
#include <vector>

#include "sdm/mesh.hpp"

namespace sdm {

struct RayHit {
  int face = -1;
  double t = std::numeric_limits<double>::infinity();
  bool hit() const { return face >= 0; }
};

struct ClosestPoint {
  int face = -1;
  double distance = std::numeric_limits<double>::infinity();
  Vec3 point = Vec3::Zero();
};

// Static bounding-volume hierarchy over mesh triangles. Built once, read-only
// afterwards; safe to share across threads.
class Bvh {
 public:
  Bvh() = default;
  explicit Bvh(const TriMesh& mesh);

  bool empty() const { return tri_count_ == 0; }

  // Nearest-hit ray cast (dir need not be unit; t is in units of |dir|).
  RayHit raycast(const Vec3& origin, const Vec3& dir,
                 double t_max = std::numeric_limits<double>::infinity()) const;

  ClosestPoint closest_point(const Vec3& p) const;
  double distance(const Vec3& p) const { return closest_point(p).distance; }

 private:
  struct Node {
    Vec3 lo, hi;
    int left = -1;   // internal: child node indices
    int right = -1;
    int first = 0;   // leaf: range into tri order
    int count = 0;   // > 0 for leaves
  };

  int build(std::vector<int>& order, int begin, int end,
            const std::vector<Vec3>& centroids);
  double box_distance_sq(const Node& n, const Vec3& p) const;
  bool box_intersect(const Node& n, const Vec3& origin, const Vec3& inv_dir, double t_max) const;

  std::vector<Node> nodes_;
  std::vector<int> tri_face_;              // flattened order -> original face id
  std::vector<std::array<Vec3, 3>> tris_;  // triangle vertices in flattened order
  int root_ = -1;
  size_t tri_count_ = 0;
};

// Exact unsigned distance from p to the nearest triangle of mesh.
// Convenience wrapper that builds a throwaway BVH; hold a Bvh for bulk queries.
double point_to_mesh_distance(const Vec3& p, const TriMesh& mesh);

// Reference O(faces) scan used as the oracle for BVH queries.
double point_to_mesh_distance_brute(const Vec3& p, const TriMesh& mesh);

// Closest point on a single triangle.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace sdm
