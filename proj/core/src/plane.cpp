#include "sdm/plane.hpp"

#include <cmath>

namespace sdm {

namespace {
const double kCos15 = std::cos(15.0 * M_PI / 180.0);
const double kSin15 = std::sin(15.0 * M_PI / 180.0);
}  // namespace

PlaneClass classify_plane_normal(const Vec3& n) {
  double up = n.z();
  if (up >= kCos15) return PlaneClass::Floor;
  if (up <= -kCos15) return PlaneClass::Ceiling;
  if (std::abs(up) <= kSin15) return PlaneClass::Wall;
  return PlaneClass::Other;
}

void PlaneFitAccumulator::add(const Vec3& p) {
  ++n_;
  sum_ += p;
  sum_outer_ += p * p.transpose();
}

Plane PlaneFitAccumulator::fit(std::span<const Vec3> reference_normals) const {
  if (n_ < 3) throw DegenerateInput("fit_plane: needs >= 3 points");
  Vec3 centroid = sum_ / static_cast<double>(n_);
  Eigen::Matrix3d cov =
      sum_outer_ / static_cast<double>(n_) - centroid * centroid.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  // Eigenvalues ascending; collinear input has two near-zero eigenvalues.
  double scale = std::max(eig.eigenvalues()(2), 1e-30);
  if (eig.eigenvalues()(1) <= scale * 1e-10) {
    throw DegenerateInput("fit_plane: collinear or coincident points");
  }
  Vec3 normal = eig.eigenvectors().col(0).normalized();

  double vote = 0.0;
  for (const Vec3& r : reference_normals) vote += normal.dot(r);
  if (vote < 0.0) {
    normal = -normal;
  } else if (vote == 0.0) {
    // Deterministic sign: prefer positive Z, then Y, then X.
    const double tol = 1e-12;
    double key = std::abs(normal.z()) > tol ? normal.z()
               : std::abs(normal.y()) > tol ? normal.y()
                                            : normal.x();
    if (key < 0.0) normal = -normal;
  }
  Plane plane;
  plane.normal = normal;
  plane.offset = normal.dot(centroid);
  plane.cls = PlaneClass::Other;
  return plane;
}

Plane fit_plane(std::span<const Vec3> points, std::span<const Vec3> reference_normals) {
  PlaneFitAccumulator acc;
  for (const Vec3& p : points) acc.add(p);
  return acc.fit(reference_normals);
}

}  // namespace sdm
