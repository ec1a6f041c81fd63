#include "sdm/hole_fill.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

namespace sdm {

namespace {

double cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double ring_signed_area(const std::vector<Vec2>& pts, const std::vector<int>& ring) {
  double area = 0.0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Vec2& a = pts[ring[i]];
    const Vec2& b = pts[ring[(i + 1) % ring.size()]];
    area += a.x() * b.y() - b.x() * a.y();
  }
  return area / 2.0;
}

bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  auto sgn = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
  int d1 = sgn(cross2(c, d, a));
  int d2 = sgn(cross2(c, d, b));
  int d3 = sgn(cross2(a, b, c));
  int d4 = sgn(cross2(a, b, d));
  return d1 * d2 < 0 && d3 * d4 < 0;  // proper crossing only
}

}  // namespace

bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& points,
                      const std::vector<int>& ring) {
  bool inside = false;
  for (size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Vec2& a = points[ring[i]];
    const Vec2& b = points[ring[j]];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      double x = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (p.x() < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

struct EarRing {
  std::vector<int> ids;  // indices into the caller's point array
};

double polygon_scale(const std::vector<Vec2>& pts, const std::vector<int>& ring) {
  Vec2 lo = pts[ring[0]], hi = pts[ring[0]];
  for (int id : ring) {
    lo = lo.cwiseMin(pts[id]);
    hi = hi.cwiseMax(pts[id]);
  }
  return (hi - lo).norm();
}

// Splices hole rings into the outer ring through mutually visible bridge
// vertices (each bridge edge appears twice, once per direction).
std::vector<int> bridge_holes(const std::vector<Vec2>& pts, std::vector<int> outer,
                              std::vector<std::vector<int>> holes) {
  // Process right-most holes first; keeps bridges from crossing other holes.
  std::sort(holes.begin(), holes.end(), [&](const auto& a, const auto& b) {
    double ax = -1e300, bx = -1e300;
    for (int id : a) ax = std::max(ax, pts[id].x());
    for (int id : b) bx = std::max(bx, pts[id].x());
    return ax > bx;
  });

  for (const auto& hole : holes) {
    // Hole anchor: right-most vertex (lowest ring position on ties).
    size_t anchor = 0;
    for (size_t i = 1; i < hole.size(); ++i) {
      if (pts[hole[i]].x() > pts[hole[anchor]].x()) anchor = i;
    }
    const Vec2& h = pts[hole[anchor]];

    auto visible = [&](size_t outer_pos) {
      const Vec2& v = pts[outer[outer_pos]];
      auto blocked_by = [&](const std::vector<int>& ring) {
        for (size_t i = 0; i < ring.size(); ++i) {
          const Vec2& a = pts[ring[i]];
          const Vec2& b = pts[ring[(i + 1) % ring.size()]];
          if (segments_cross(h, v, a, b)) return true;
        }
        return false;
      };
      return !blocked_by(outer) && !blocked_by(hole);
    };

    int best = -1;
    double best_d = 0.0;
    for (size_t i = 0; i < outer.size(); ++i) {
      if (!visible(i)) continue;
      double d = (pts[outer[i]] - h).squaredNorm();
      if (best < 0 || d < best_d) {
        best = static_cast<int>(i);
        best_d = d;
      }
    }
    if (best < 0) throw DegenerateInput("ear_clip: hole has no visible bridge vertex");

    std::vector<int> merged;
    merged.reserve(outer.size() + hole.size() + 2);
    for (int i = 0; i <= best; ++i) merged.push_back(outer[i]);
    for (size_t k = 0; k <= hole.size(); ++k) {
      merged.push_back(hole[(anchor + k) % hole.size()]);
    }
    merged.push_back(outer[best]);
    for (size_t i = best + 1; i < outer.size(); ++i) merged.push_back(outer[i]);
    outer = std::move(merged);
  }
  return outer;
}

}  // namespace

std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& points,
                                         const std::vector<int>& outer,
                                         const std::vector<std::vector<int>>& holes) {
  if (outer.size() < 3) throw DegenerateInput("ear_clip: polygon has fewer than 3 vertices");
  const double outer_area = ring_signed_area(points, outer);
  const double orient = outer_area >= 0.0 ? 1.0 : -1.0;

  std::vector<std::vector<int>> oriented_holes = holes;
  for (auto& hole : oriented_holes) {
    if (hole.size() < 3) throw DegenerateInput("ear_clip: hole with fewer than 3 vertices");
    if (ring_signed_area(points, hole) * outer_area > 0.0) {
      std::reverse(hole.begin(), hole.end());
    }
  }
  std::vector<int> ring = bridge_holes(points, outer, oriented_holes);

  const double scale = polygon_scale(points, ring);
  const double eps_area = std::max(1e-30, scale * scale * 1e-14);

  auto is_convex = [&](int prev, int cur, int next) {
    return orient * cross2(points[prev], points[cur], points[next]) > eps_area;
  };
  auto is_flat = [&](int prev, int cur, int next) {
    return std::abs(cross2(points[prev], points[cur], points[next])) <= eps_area;
  };
  auto contains_blocker = [&](int prev, int cur, int next, const std::vector<int>& r) {
    const Vec2& a = points[prev];
    const Vec2& b = points[cur];
    const Vec2& c = points[next];
    for (int id : r) {
      const Vec2& p = points[id];
      if ((p - a).squaredNorm() < 1e-28 || (p - b).squaredNorm() < 1e-28 ||
          (p - c).squaredNorm() < 1e-28) {
        continue;  // coincident with an ear corner (bridge duplicates)
      }
      double s1 = orient * cross2(a, b, p);
      double s2 = orient * cross2(b, c, p);
      double s3 = orient * cross2(c, a, p);
      if (s1 >= -eps_area && s2 >= -eps_area && s3 >= -eps_area) return true;
    }
    return false;
  };

  std::vector<std::array<int, 3>> triangles;
  while (ring.size() > 3) {
    const size_t n = ring.size();
    bool clipped = false;
    for (size_t i = 0; i < n; ++i) {
      int prev = ring[(i + n - 1) % n];
      int cur = ring[i];
      int next = ring[(i + 1) % n];
      if (!is_convex(prev, cur, next)) continue;
      if (contains_blocker(prev, cur, next, ring)) continue;
      triangles.push_back({prev, cur, next});
      ring.erase(ring.begin() + static_cast<long>(i));
      clipped = true;
      break;
    }
    if (clipped) continue;
    // Degenerate cleanup: drop a flat vertex (zero-area wedge) without
    // emitting a triangle.
    for (size_t i = 0; i < n; ++i) {
      int prev = ring[(i + n - 1) % n];
      int cur = ring[i];
      int next = ring[(i + 1) % n];
      if (is_flat(prev, cur, next)) {
        ring.erase(ring.begin() + static_cast<long>(i));
        clipped = true;
        break;
      }
    }
    if (!clipped) throw DegenerateInput("ear_clip: no ear found (self-intersecting polygon?)");
  }
  if (ring.size() == 3) {
    if (std::abs(cross2(points[ring[0]], points[ring[1]], points[ring[2]])) > eps_area) {
      triangles.push_back({ring[0], ring[1], ring[2]});
    }
  }
  return triangles;
}

// ------------------------------------------------------------------------
// Plane-extension hole filling
// ------------------------------------------------------------------------

namespace {

struct PlaneFrame {
  Vec3 origin;
  Vec3 u, v;  // in-plane orthonormal axes
  Vec2 project(const Vec3& p) const {
    return Vec2(u.dot(p - origin), v.dot(p - origin));
  }
};

PlaneFrame make_frame(const Plane& plane) {
  PlaneFrame frame;
  frame.origin = plane.project(Vec3::Zero());
  int axis = 0;
  Vec3 n = plane.normal;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(n(k)) < std::abs(n(axis))) axis = k;
  }
  Vec3 e = Vec3::Zero();
  e(axis) = 1.0;
  frame.u = (e - n.dot(e) * n).normalized();
  frame.v = n.cross(frame.u);
  return frame;
}

struct IntersectionLine {
  Vec3 point;
  Vec3 dir;  // unit
  Vec3 closest_to(const Vec3& p) const { return point + dir.dot(p - point) * dir; }
};

std::optional<IntersectionLine> plane_intersection(const Plane& a, const Plane& b) {
  Vec3 dir = a.normal.cross(b.normal);
  double len = dir.norm();
  if (len < 1e-9) return std::nullopt;
  dir /= len;
  // Minimum-norm point satisfying both plane equations.
  double nn = a.normal.dot(b.normal);
  double denom = 1.0 - nn * nn;
  double ca = (a.offset - b.offset * nn) / denom;
  double cb = (b.offset - a.offset * nn) / denom;
  return IntersectionLine{ca * a.normal + cb * b.normal, dir};
}

std::optional<Vec3> triple_point(const Plane& a, const Plane& b, const Plane& c) {
  Eigen::Matrix3d m;
  m.row(0) = a.normal;
  m.row(1) = b.normal;
  m.row(2) = c.normal;
  if (std::abs(m.determinant()) < 1e-9) return std::nullopt;
  return Vec3(m.inverse() * Vec3(a.offset, b.offset, c.offset));
}

struct LoopContext {
  std::vector<int> verts;           // reversed rim order (fill winding)
  std::vector<int> nearest_plane;   // structural plane id per vertex
  std::vector<int> second_plane;    // junction partner or -1
  std::vector<int> plane_ids;       // distinct planes touched, sorted
};

struct FillWork {
  // Triangles as triples of mesh vertex ids, plus their plane assignment.
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> triangle_plane;
};

// Collapses exact consecutive duplicates (e.g. a junction vertex snapped onto
// the corner point).
void dedupe_ring(std::vector<int>& ring, const std::vector<Vec3>& positions) {
  std::vector<int> out;
  for (int id : ring) {
    if (!out.empty() && (positions[out.back()] - positions[id]).squaredNorm() < 1e-24) continue;
    out.push_back(id);
  }
  while (out.size() > 1 && (positions[out.front()] - positions[out.back()]).squaredNorm() < 1e-24) {
    out.pop_back();
  }
  ring = std::move(out);
}

void triangulate_planar_ring(const TriMesh& mesh, int plane_id, const Plane& plane,
                             const std::vector<int>& ring,
                             const std::vector<std::vector<int>>& islands, FillWork& work) {
  PlaneFrame frame = make_frame(plane);
  std::vector<Vec2> pts(mesh.vertices.size() + 0);
  // Project only referenced vertices; indices address the mesh vertex array.
  pts.resize(mesh.vertices.size());
  auto project_ring = [&](const std::vector<int>& r) {
    for (int id : r) pts[id] = frame.project(mesh.vertices[id]);
  };
  project_ring(ring);
  for (const auto& isl : islands) project_ring(isl);
  auto tris = ear_clip(pts, ring, islands);
  for (const auto& t : tris) {
    work.triangles.push_back(t);
    work.triangle_plane.push_back(plane_id);
  }
}

}  // namespace

HoleFillResult fill_holes_plane_extension(const TriMesh& mesh,
                                          const std::vector<std::vector<int>>& loops,
                                          const PlanarDecomposition& decomp,
                                          const HoleFillOptions& options) {
  HoleFillResult result;
  result.mesh = mesh;
  TriMesh& out = result.mesh;

  std::vector<int> structural;
  for (size_t p = 0; p < decomp.planes.size(); ++p) {
    PlaneClass cls = decomp.planes[p].cls;
    if (cls == PlaneClass::Floor || cls == PlaneClass::Wall || cls == PlaneClass::Ceiling) {
      structural.push_back(static_cast<int>(p));
    }
  }

  // Classify each loop; single-plane loops are grouped per plane afterwards
  // so islands can be nested into their containing loop.
  std::vector<LoopContext> contexts(loops.size());
  std::vector<int> loop_state(loops.size(), 0);  // 0 pending, 1 open, 2 filled
  auto mark_open = [&](int loop, const std::string& reason) {
    loop_state[loop] = 1;
    result.open_loops.push_back({loop, reason});
  };

  for (size_t li = 0; li < loops.size(); ++li) {
    LoopContext& ctx = contexts[li];
    ctx.verts.assign(loops[li].rbegin(), loops[li].rend());  // fill winding
    if (ctx.verts.size() < 3) {
      mark_open(static_cast<int>(li), "degenerate loop");
      continue;
    }
    bool ok = true;
    for (int v : ctx.verts) {
      const Vec3& p = out.vertices[v];
      int best = -1, second = -1;
      double best_d = 0.0, second_d = 0.0;
      for (int pid : structural) {
        double d = decomp.planes[pid].distance(p);
        if (best < 0 || d < best_d) {
          second = best;
          second_d = best_d;
          best = pid;
          best_d = d;
        } else if (second < 0 || d < second_d) {
          second = pid;
          second_d = d;
        }
      }
      if (best < 0 || best_d > options.snap_radius_m) {
        mark_open(static_cast<int>(li), "no structural plane within snap radius");
        ok = false;
        break;
      }
      ctx.nearest_plane.push_back(best);
      ctx.second_plane.push_back(
          (second >= 0 && second_d <= options.junction_tol_m) ? second : -1);
    }
    if (!ok) continue;
    ctx.plane_ids = ctx.nearest_plane;
    std::sort(ctx.plane_ids.begin(), ctx.plane_ids.end());
    ctx.plane_ids.erase(std::unique(ctx.plane_ids.begin(), ctx.plane_ids.end()),
                        ctx.plane_ids.end());
    if (ctx.plane_ids.size() > 3) {
      mark_open(static_cast<int>(li), "loop touches more than 3 structural planes");
    }
  }

  FillWork work;

  // ---- single-plane loops, grouped per plane for island nesting ----
  std::map<int, std::vector<int>> per_plane;
  for (size_t li = 0; li < loops.size(); ++li) {
    if (loop_state[li] != 0 || contexts[li].plane_ids.size() != 1) continue;
    per_plane[contexts[li].plane_ids[0]].push_back(static_cast<int>(li));
  }
  for (auto& [plane_id, members] : per_plane) {
    const Plane& plane = decomp.planes[plane_id];
    // Snap all member vertices onto the plane first.
    for (int li : members) {
      for (int v : contexts[li].verts) out.vertices[v] = plane.project(out.vertices[v]);
    }
    PlaneFrame frame = make_frame(plane);
    std::vector<Vec2> pts(out.vertices.size());
    for (int li : members) {
      for (int v : contexts[li].verts) pts[v] = frame.project(out.vertices[v]);
    }
    // Nesting depth by point-in-polygon count.
    std::map<int, std::vector<int>> islands_of;
    std::vector<int> depth(members.size(), 0);
    std::vector<int> direct(members.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) {
      double best_area = 0.0;
      for (size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        if (point_in_polygon(pts[contexts[members[i]].verts[0]], pts,
                             contexts[members[j]].verts)) {
          ++depth[i];
          double area = std::abs(ring_signed_area(pts, contexts[members[j]].verts));
          if (direct[i] < 0 || area < best_area) {
            direct[i] = static_cast<int>(j);
            best_area = area;
          }
        }
      }
    }
    for (size_t i = 0; i < members.size(); ++i) {
      if (depth[i] % 2 == 1) islands_of[direct[i]].push_back(static_cast<int>(i));
    }
    for (size_t i = 0; i < members.size(); ++i) {
      if (depth[i] % 2 == 1) continue;  // handled as island of its container
      const std::vector<int>& island_ids = islands_of[static_cast<int>(i)];
      std::vector<std::vector<int>> islands;
      for (int isl : island_ids) islands.push_back(contexts[members[isl]].verts);
      try {
        triangulate_planar_ring(out, plane_id, plane, contexts[members[i]].verts, islands, work);
        loop_state[members[i]] = 2;
        for (int isl : island_ids) loop_state[members[isl]] = 2;
      } catch (const DegenerateInput& e) {
        mark_open(members[i], e.what());
        for (int isl : island_ids) mark_open(members[isl], "container loop failed to triangulate");
      }
    }
  }

  // ---- multi-plane loops ----
  for (size_t li = 0; li < loops.size(); ++li) {
    if (loop_state[li] != 0) continue;
    LoopContext& ctx = contexts[li];
    const size_t n = ctx.verts.size();

    if (ctx.plane_ids.size() == 2) {
      const int pa = ctx.plane_ids[0], pb = ctx.plane_ids[1];
      const Plane& A = decomp.planes[pa];
      const Plane& B = decomp.planes[pb];
      auto line = plane_intersection(A, B);
      if (!line) {
        mark_open(static_cast<int>(li), "parallel structural planes");
        continue;
      }
      // side: -1 on A, +1 on B, 0 on the junction line.
      std::vector<int> side(n);
      for (size_t i = 0; i < n; ++i) {
        side[i] = ctx.second_plane[i] >= 0 ? 0 : (ctx.nearest_plane[i] == pa ? -1 : +1);
      }
      // Insert a junction at A-B adjacencies missing one: move the endpoint
      // closer to the line onto it.
      for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        if (side[i] * side[j] == -1) {
          const Vec3& pi = out.vertices[ctx.verts[i]];
          const Vec3& pj = out.vertices[ctx.verts[j]];
          double di = (line->closest_to(pi) - pi).norm();
          double dj = (line->closest_to(pj) - pj).norm();
          side[di <= dj ? i : j] = 0;
        }
      }
      // Snap.
      for (size_t i = 0; i < n; ++i) {
        Vec3& p = out.vertices[ctx.verts[i]];
        if (side[i] == 0) {
          p = line->closest_to(p);
        } else {
          p = (side[i] < 0 ? A : B).project(p);
        }
      }
      // Exactly one maximal run per side; otherwise the topology is beyond
      // this filler.
      auto runs_of = [&](int s) {
        int runs = 0;
        for (size_t i = 0; i < n; ++i) {
          size_t prev = (i + n - 1) % n;
          if (side[i] == s && side[prev] != s) ++runs;
        }
        return runs;
      };
      int runs_a = runs_of(-1), runs_b = runs_of(+1);
      if (runs_a == 0 || runs_b == 0) {
        // Everything collapsed onto one plane after snapping.
        int pid = runs_a == 0 ? pb : pa;
        std::vector<int> ring = ctx.verts;
        dedupe_ring(ring, out.vertices);
        try {
          triangulate_planar_ring(out, pid, decomp.planes[pid], ring, {}, work);
          loop_state[li] = 2;
        } catch (const DegenerateInput& e) {
          mark_open(static_cast<int>(li), e.what());
        }
        continue;
      }
      if (runs_a != 1 || runs_b != 1) {
        mark_open(static_cast<int>(li), "alternating junction topology");
        continue;
      }
      // Polygon for one side: contiguous arc of that side plus bracketing
      // junction vertices; the implicit closing edge lies on the line and is
      // shared by both polygons.
      auto arc_for = [&](int s) {
        // Arc = all vertices outside the opposite run, junction vertices on
        // both ends included. Opposite run spans [first_opp, last_opp].
        int first_opp = -1, last_opp = -1;
        for (size_t i = 0; i < n; ++i) {
          size_t prev = (i + n - 1) % n;
          size_t next = (i + 1) % n;
          if (side[i] == -s && side[prev] != -s) first_opp = static_cast<int>(i);
          if (side[i] == -s && side[next] != -s) last_opp = static_cast<int>(i);
        }
        std::vector<int> res;
        for (int i = (last_opp + 1) % static_cast<int>(n);; i = (i + 1) % static_cast<int>(n)) {
          res.push_back(ctx.verts[i]);
          if (i == (first_opp + static_cast<int>(n) - 1) % static_cast<int>(n)) break;
        }
        return res;
      };
      std::vector<int> ring_a = arc_for(-1);
      std::vector<int> ring_b = arc_for(+1);
      dedupe_ring(ring_a, out.vertices);
      dedupe_ring(ring_b, out.vertices);
      try {
        FillWork staged;
        if (ring_a.size() >= 3) triangulate_planar_ring(out, pa, A, ring_a, {}, staged);
        if (ring_b.size() >= 3) triangulate_planar_ring(out, pb, B, ring_b, {}, staged);
        work.triangles.insert(work.triangles.end(), staged.triangles.begin(),
                              staged.triangles.end());
        work.triangle_plane.insert(work.triangle_plane.end(), staged.triangle_plane.begin(),
                                   staged.triangle_plane.end());
        loop_state[li] = 2;
      } catch (const DegenerateInput& e) {
        mark_open(static_cast<int>(li), e.what());
      }
      continue;
    }

    // ---- three planes: split runs and route closures through the corner ----
    const int pa = ctx.plane_ids[0], pb = ctx.plane_ids[1], pc = ctx.plane_ids[2];
    auto corner = triple_point(decomp.planes[pa], decomp.planes[pb], decomp.planes[pc]);
    if (!corner) {
      mark_open(static_cast<int>(li), "three planes with no common corner");
      continue;
    }
    // Assignment: junction vertices snap to their pair line; plain vertices to
    // their plane. run extraction operates on nearest_plane only.
    std::vector<int> plane_of(n);
    for (size_t i = 0; i < n; ++i) plane_of[i] = ctx.nearest_plane[i];
    for (size_t i = 0; i < n; ++i) {
      Vec3& p = out.vertices[ctx.verts[i]];
      if (ctx.second_plane[i] >= 0) {
        auto line = plane_intersection(decomp.planes[ctx.nearest_plane[i]],
                                       decomp.planes[ctx.second_plane[i]]);
        p = line ? line->closest_to(p) : *corner;
      } else {
        p = decomp.planes[plane_of[i]].project(p);
      }
    }
    // Runs of equal plane assignment (junction vertices merge with either
    // neighbor run; give them to the following run's plane boundary).
    std::vector<std::pair<int, std::vector<int>>> runs;  // (plane, vert ids)
    for (size_t i = 0; i < n; ++i) {
      int p = plane_of[i];
      if (runs.empty() || runs.back().first != p) runs.push_back({p, {}});
      runs.back().second.push_back(ctx.verts[i]);
    }
    if (runs.size() > 1 && runs.front().first == runs.back().first) {
      // Circular wrap: merge last run into first.
      auto tail = runs.back().second;
      runs.pop_back();
      tail.insert(tail.end(), runs.front().second.begin(), runs.front().second.end());
      runs.front().second = std::move(tail);
    }
    if (runs.size() != 3) {
      mark_open(static_cast<int>(li), "three-plane loop without three clean runs");
      continue;
    }
    int corner_vertex = static_cast<int>(out.vertices.size());
    out.vertices.push_back(*corner);
    try {
      FillWork staged;
      for (size_t r = 0; r < 3; ++r) {
        std::vector<int> ring = runs[r].second;
        // Bracketing junctions: last vertex of the previous run and first of
        // the next already sit on the shared lines; close through the corner.
        ring.push_back(corner_vertex);
        dedupe_ring(ring, out.vertices);
        if (ring.size() < 3) continue;
        triangulate_planar_ring(out, runs[r].first, decomp.planes[runs[r].first], ring, {},
                                staged);
      }
      work.triangles.insert(work.triangles.end(), staged.triangles.begin(),
                            staged.triangles.end());
      work.triangle_plane.insert(work.triangle_plane.end(), staged.triangle_plane.begin(),
                                 staged.triangle_plane.end());
      loop_state[li] = 2;
    } catch (const DegenerateInput& e) {
      mark_open(static_cast<int>(li), e.what());
    }
  }

  // Commit fill triangles.
  const bool labels = out.has_labels();
  const bool uvs = out.has_uvs();
  for (size_t t = 0; t < work.triangles.size(); ++t) {
    const auto& tri = work.triangles[t];
    Vec3 a = out.vertices[tri[0]], b = out.vertices[tri[1]], c = out.vertices[tri[2]];
    if (0.5 * (b - a).cross(c - a).norm() < kDegenerateFaceArea) continue;
    result.filled_faces.push_back(static_cast<int>(out.faces.size()));
    result.plane_of_filled.push_back(work.triangle_plane[t]);
    out.faces.push_back(tri);
    if (labels) out.face_labels.push_back(FaceLabel::Structure);
    if (uvs) out.face_uvs.push_back({Vec2::Zero(), Vec2::Zero(), Vec2::Zero()});
  }
  std::sort(result.open_loops.begin(), result.open_loops.end(),
            [](const OpenLoop& a, const OpenLoop& b) { return a.loop < b.loop; });
  return result;
}

}  // namespace sdm
