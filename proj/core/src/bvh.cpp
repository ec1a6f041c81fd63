#include "sdm/bvh.hpp"

#include <algorithm>
#include <cmath>

namespace sdm {

namespace {
constexpr int kLeafSize = 4;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Moeller-Trumbore, double precision.
bool ray_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                  const Vec3& c, double& t_out) {
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 pvec = dir.cross(ac);
  const double det = ab.dot(pvec);
  if (std::abs(det) < 1e-14) return false;
  const double inv_det = 1.0 / det;
  const Vec3 tvec = origin - a;
  const double u = tvec.dot(pvec) * inv_det;
  if (u < -1e-12 || u > 1.0 + 1e-12) return false;
  const Vec3 qvec = tvec.cross(ab);
  const double v = dir.dot(qvec) * inv_det;
  if (v < -1e-12 || u + v > 1.0 + 1e-12) return false;
  const double t = ac.dot(qvec) * inv_det;
  if (t <= 1e-12) return false;
  t_out = t;
  return true;
}

}  // namespace

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  // Ericson, Real-Time Collision Detection, 5.1.5.
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return a + v * ab;
  }

  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return a + w * ac;
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return b + w * (c - b);
  }

  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom;
  const double w = vc * denom;
  return a + ab * v + ac * w;
}

Bvh::Bvh(const TriMesh& mesh) {
  tri_count_ = mesh.faces.size();
  if (tri_count_ == 0) return;
  tris_.reserve(tri_count_);
  std::vector<Vec3> centroids;
  centroids.reserve(tri_count_);
  for (const auto& t : mesh.faces) {
    tris_.push_back({mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]});
    centroids.push_back((tris_.back()[0] + tris_.back()[1] + tris_.back()[2]) / 3.0);
  }
  std::vector<int> order(tri_count_);
  for (size_t i = 0; i < tri_count_; ++i) order[i] = static_cast<int>(i);
  nodes_.reserve(2 * tri_count_);
  root_ = build(order, 0, static_cast<int>(tri_count_), centroids);

  // Re-pack triangles in traversal order.
  std::vector<std::array<Vec3, 3>> packed(tri_count_);
  tri_face_.resize(tri_count_);
  for (size_t i = 0; i < tri_count_; ++i) {
    packed[i] = tris_[order[i]];
    tri_face_[i] = order[i];
  }
  tris_ = std::move(packed);
}

int Bvh::build(std::vector<int>& order, int begin, int end, const std::vector<Vec3>& centroids) {
  Node node;
  node.lo = Vec3::Constant(kInf);
  node.hi = Vec3::Constant(-kInf);
  for (int i = begin; i < end; ++i) {
    for (const Vec3& v : tris_[order[i]]) {
      node.lo = node.lo.cwiseMin(v);
      node.hi = node.hi.cwiseMax(v);
    }
  }
  int index = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= kLeafSize) {
    nodes_[index].first = begin;
    nodes_[index].count = end - begin;
    return index;
  }
  Vec3 extent = node.hi - node.lo;
  int axis = 0;
  if (extent.y() > extent.x()) axis = 1;
  if (extent.z() > extent(axis)) axis = 2;
  int mid = (begin + end) / 2;
  std::nth_element(order.begin() + begin, order.begin() + mid, order.begin() + end,
                   [&](int a, int b) {
                     if (centroids[a](axis) != centroids[b](axis)) {
                       return centroids[a](axis) < centroids[b](axis);
                     }
                     return a < b;
                   });
  int left = build(order, begin, mid, centroids);
  int right = build(order, mid, end, centroids);
  nodes_[index].left = left;
  nodes_[index].right = right;
  return index;
}

double Bvh::box_distance_sq(const Node& n, const Vec3& p) const {
  double d2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    double d = std::max({n.lo(k) - p(k), 0.0, p(k) - n.hi(k)});
    d2 += d * d;
  }
  return d2;
}

bool Bvh::box_intersect(const Node& n, const Vec3& origin, const Vec3& inv_dir,
                        double t_max) const {
  double t0 = 0.0, t1 = t_max;
  for (int k = 0; k < 3; ++k) {
    double ta = (n.lo(k) - origin(k)) * inv_dir(k);
    double tb = (n.hi(k) - origin(k)) * inv_dir(k);
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return true;
}

RayHit Bvh::raycast(const Vec3& origin, const Vec3& dir, double t_max) const {
  RayHit best;
  if (root_ < 0) return best;
  best.t = t_max;
  Vec3 inv_dir;
  for (int k = 0; k < 3; ++k) inv_dir(k) = dir(k) != 0.0 ? 1.0 / dir(k) : kInf;

  int stack[64];
  int top = 0;
  stack[top++] = root_;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (!box_intersect(node, origin, inv_dir, best.t)) continue;
    if (node.count > 0) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        double t;
        if (ray_triangle(origin, dir, tris_[i][0], tris_[i][1], tris_[i][2], t) && t < best.t) {
          best.t = t;
          best.face = tri_face_[i];
        }
      }
    } else {
      stack[top++] = node.right;
      stack[top++] = node.left;
    }
  }
  if (best.face < 0) best.t = kInf;
  return best;
}

ClosestPoint Bvh::closest_point(const Vec3& p) const {
  ClosestPoint best;
  if (root_ < 0) return best;
  double best_sq = kInf;

  int stack[64];
  int top = 0;
  stack[top++] = root_;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (box_distance_sq(node, p) >= best_sq) continue;
    if (node.count > 0) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        Vec3 q = closest_point_on_triangle(p, tris_[i][0], tris_[i][1], tris_[i][2]);
        double d2 = (q - p).squaredNorm();
        if (d2 < best_sq) {
          best_sq = d2;
          best.face = tri_face_[i];
          best.point = q;
        }
      }
    } else {
      // Visit the nearer child first so pruning bites sooner.
      double dl = box_distance_sq(nodes_[node.left], p);
      double dr = box_distance_sq(nodes_[node.right], p);
      if (dl <= dr) {
        stack[top++] = node.right;
        stack[top++] = node.left;
      } else {
        stack[top++] = node.left;
        stack[top++] = node.right;
      }
    }
  }
  best.distance = std::sqrt(best_sq);
  return best;
}

double point_to_mesh_distance(const Vec3& p, const TriMesh& mesh) {
  if (mesh.faces.empty()) throw DegenerateInput("point_to_mesh_distance: empty mesh");
  return Bvh(mesh).distance(p);
}

double point_to_mesh_distance_brute(const Vec3& p, const TriMesh& mesh) {
  if (mesh.faces.empty()) throw DegenerateInput("point_to_mesh_distance: empty mesh");
  double best = kInf;
  for (const auto& t : mesh.faces) {
    Vec3 q = closest_point_on_triangle(p, mesh.vertices[t[0]], mesh.vertices[t[1]],
                                       mesh.vertices[t[2]]);
    best = std::min(best, (q - p).norm());
  }
  return best;
}

}  // namespace sdm
