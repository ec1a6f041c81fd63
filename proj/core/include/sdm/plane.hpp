#pragma once

#include <span>
#include <vector>

#include "sdm/types.hpp"

namespace sdm {

// Infinite plane n.x = d with unit n.
struct Plane {
  Vec3 normal = Vec3::UnitZ();
  double offset = 0.0;
  PlaneClass cls = PlaneClass::Other;
  std::vector<int> inlier_faces;

  double signed_distance(const Vec3& p) const { return normal.dot(p) - offset; }
  double distance(const Vec3& p) const { return std::abs(signed_distance(p)); }
  Vec3 project(const Vec3& p) const { return p - signed_distance(p) * normal; }
};

// Normal-cone test only; does not apply the lowest-floor selection rule.
PlaneClass classify_plane_normal(const Vec3& unit_normal);

// Total least squares: centroid + smallest covariance eigenvector. When
// reference normals are given the sign follows their majority; otherwise the
// sign prefers positive Z, then Y, then X components.
Plane fit_plane(std::span<const Vec3> points, std::span<const Vec3> reference_normals = {});

// Incremental covariance accumulator so region growing can refit in O(1).
class PlaneFitAccumulator {
 public:
  void add(const Vec3& p);
  size_t count() const { return n_; }
  // Throws DegenerateInput below 3 points or for collinear input.
  Plane fit(std::span<const Vec3> reference_normals = {}) const;

 private:
  size_t n_ = 0;
  Vec3 sum_ = Vec3::Zero();
  Eigen::Matrix3d sum_outer_ = Eigen::Matrix3d::Zero();
};

}  // namespace sdm
