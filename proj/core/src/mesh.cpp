#include "sdm/mesh.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace sdm {

Vec3 TriMesh::face_normal(int f) const {
  const auto& t = faces[f];
  Vec3 n = (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]);
  double len = n.norm();
  if (len <= 0.0) return Vec3::Zero();
  return n / len;
}

Vec3 TriMesh::face_centroid(int f) const {
  const auto& t = faces[f];
  return (vertices[t[0]] + vertices[t[1]] + vertices[t[2]]) / 3.0;
}

double TriMesh::face_area(int f) const {
  const auto& t = faces[f];
  return 0.5 *
         (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
}

double TriMesh::surface_area() const {
  double total = 0.0;
  for (size_t f = 0; f < faces.size(); ++f) total += face_area(static_cast<int>(f));
  return total;
}

void TriMesh::validate() const {
  const int nv = static_cast<int>(vertices.size());
  for (const Vec3& v : vertices) {
    if (!v.allFinite()) throw ValidationError("mesh: non-finite vertex coordinate");
  }
  for (size_t f = 0; f < faces.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      int idx = faces[f][k];
      if (idx < 0 || idx >= nv) {
        throw ValidationError("mesh: face " + std::to_string(f) + " references vertex " +
                              std::to_string(idx) + " out of " + std::to_string(nv));
      }
    }
    if (face_area(static_cast<int>(f)) < kDegenerateFaceArea) {
      throw ValidationError("mesh: degenerate face " + std::to_string(f));
    }
  }
  if (!face_labels.empty() && face_labels.size() != faces.size()) {
    throw ValidationError("mesh: face_labels length mismatch");
  }
  if (!face_plane.empty() && face_plane.size() != faces.size()) {
    throw ValidationError("mesh: face_plane length mismatch");
  }
  if (!face_uvs.empty() && face_uvs.size() != faces.size()) {
    throw ValidationError("mesh: face_uvs length mismatch");
  }
}

std::vector<MeshEdge> boundary_edges(const TriMesh& mesh) {
  // Count undirected incidences; keep the directed edge of the single face.
  std::map<std::pair<int, int>, std::pair<int, MeshEdge>> edges;
  for (const auto& t : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto& entry = edges[{key.first, key.second}];
      entry.first++;
      entry.second = MeshEdge{a, b};
    }
  }
  std::vector<MeshEdge> result;
  for (const auto& [key, entry] : edges) {
    if (entry.first == 1) result.push_back(entry.second);
  }
  return result;
}

std::vector<int> compact_vertices(TriMesh& mesh) {
  std::vector<int> remap(mesh.vertices.size(), -1);
  std::vector<Vec3> kept;
  kept.reserve(mesh.vertices.size());
  for (const auto& t : mesh.faces) {
    for (int idx : t) {
      if (remap[idx] < 0) {
        remap[idx] = static_cast<int>(kept.size());
        kept.push_back(mesh.vertices[idx]);
      }
    }
  }
  for (auto& t : mesh.faces) {
    for (int& idx : t) idx = remap[idx];
  }
  mesh.vertices = std::move(kept);
  return remap;
}

void append_mesh(TriMesh& mesh, const TriMesh& other) {
  const int base = static_cast<int>(mesh.vertices.size());
  const bool had_labels = mesh.has_labels() || other.has_labels();
  if (had_labels) {
    mesh.face_labels.resize(mesh.faces.size(), FaceLabel::Unknown);
  }
  mesh.vertices.insert(mesh.vertices.end(), other.vertices.begin(), other.vertices.end());
  for (size_t f = 0; f < other.faces.size(); ++f) {
    const auto& t = other.faces[f];
    mesh.faces.push_back({t[0] + base, t[1] + base, t[2] + base});
    if (had_labels) {
      mesh.face_labels.push_back(other.has_labels() ? other.face_labels[f] : FaceLabel::Unknown);
    }
  }
  mesh.face_plane.clear();
  mesh.face_uvs.clear();
}

namespace {

void add_quad(TriMesh& m, const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  // Two triangles (a,b,c) and (a,c,d); winding gives the quad normal by the
  // right-hand rule.
  int base = static_cast<int>(m.vertices.size());
  m.vertices.insert(m.vertices.end(), {a, b, c, d});
  m.faces.push_back({base, base + 1, base + 2});
  m.faces.push_back({base, base + 2, base + 3});
}

void weld_vertices(TriMesh& m) {
  std::map<std::array<double, 3>, int> seen;
  std::vector<int> remap(m.vertices.size());
  std::vector<Vec3> unique;
  for (size_t i = 0; i < m.vertices.size(); ++i) {
    std::array<double, 3> key{m.vertices[i].x(), m.vertices[i].y(), m.vertices[i].z()};
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, static_cast<int>(unique.size()));
      remap[i] = static_cast<int>(unique.size());
      unique.push_back(m.vertices[i]);
    } else {
      remap[i] = it->second;
    }
  }
  for (auto& t : m.faces) {
    for (int& idx : t) idx = remap[idx];
  }
  m.vertices = std::move(unique);
}

}  // namespace

TriMesh make_room_box(double width, double depth, double height) {
  const double hw = width / 2.0, hd = depth / 2.0;
  Vec3 p000(-hw, -hd, 0), p100(hw, -hd, 0), p110(hw, hd, 0), p010(-hw, hd, 0);
  Vec3 p001(-hw, -hd, height), p101(hw, -hd, height), p111(hw, hd, height), p011(-hw, hd, height);
  TriMesh m;
  add_quad(m, p000, p100, p110, p010);  // floor, normal +z
  add_quad(m, p001, p011, p111, p101);  // ceiling, normal -z
  add_quad(m, p000, p010, p011, p001);  // wall x=-hw, normal +x
  add_quad(m, p100, p101, p111, p110);  // wall x=+hw, normal -x
  add_quad(m, p000, p001, p101, p100);  // wall y=-hd, normal +y
  add_quad(m, p010, p110, p111, p011);  // wall y=+hd, normal -y
  weld_vertices(m);
  return m;
}

TriMesh make_box(const Vec3& center, const Vec3& size, double yaw) {
  const double hx = size.x() / 2.0, hy = size.y() / 2.0, hz = size.z() / 2.0;
  TriMesh m;
  Vec3 c = Vec3::Zero();
  Vec3 p000(-hx, -hy, -hz), p100(hx, -hy, -hz), p110(hx, hy, -hz), p010(-hx, hy, -hz);
  Vec3 p001(-hx, -hy, hz), p101(hx, -hy, hz), p111(hx, hy, hz), p011(-hx, hy, hz);
  add_quad(m, p000, p010, p110, p100);  // bottom, normal -z
  add_quad(m, p001, p101, p111, p011);  // top, normal +z
  add_quad(m, p000, p001, p011, p010);  // x=-hx, normal -x
  add_quad(m, p100, p110, p111, p101);  // x=+hx, normal +x
  add_quad(m, p000, p100, p101, p001);  // y=-hy, normal -y
  add_quad(m, p010, p011, p111, p110);  // y=+hy, normal +y
  weld_vertices(m);
  Eigen::AngleAxisd rot(yaw, Vec3::UnitZ());
  for (Vec3& v : m.vertices) v = rot * (v - c) + center;
  return m;
}

TriMesh make_cylinder(const Vec3& center, double radius, double height, int segments) {
  TriMesh m;
  if (segments < 3) throw ValidationError("cylinder needs >= 3 segments");
  std::vector<int> lo(segments), hi(segments);
  for (int i = 0; i < segments; ++i) {
    double a = 2.0 * M_PI * i / segments;
    Vec3 rim(radius * std::cos(a), radius * std::sin(a), 0.0);
    lo[i] = static_cast<int>(m.vertices.size());
    m.vertices.push_back(center + rim);
    hi[i] = static_cast<int>(m.vertices.size());
    m.vertices.push_back(center + rim + Vec3(0, 0, height));
  }
  int cb = static_cast<int>(m.vertices.size());
  m.vertices.push_back(center);
  int ct = static_cast<int>(m.vertices.size());
  m.vertices.push_back(center + Vec3(0, 0, height));
  for (int i = 0; i < segments; ++i) {
    int j = (i + 1) % segments;
    m.faces.push_back({lo[i], lo[j], hi[j]});  // side, outward
    m.faces.push_back({lo[i], hi[j], hi[i]});
    m.faces.push_back({cb, lo[j], lo[i]});     // bottom cap, normal -z
    m.faces.push_back({ct, hi[i], hi[j]});     // top cap, normal +z
  }
  return m;
}

}  // namespace sdm
