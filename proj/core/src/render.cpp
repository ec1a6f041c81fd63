#include "sdm/render.hpp"

#include <atomic>
#include <thread>

namespace sdm {

void parallel_rows(int rows, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 4;
  }
  threads = std::min(threads, rows);
  if (threads <= 1) {
    for (int y = 0; y < rows; ++y) fn(y);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) {
    pool.emplace_back([&]() {
      for (int y = next.fetch_add(1); y < rows; y = next.fetch_add(1)) fn(y);
    });
  }
  for (auto& t : pool) t.join();
}

GeometryRender render_geometry(const TriMesh& mesh, const Bvh& bvh, const EquirectCamera& cam,
                               const Pose& pose, int threads) {
  cam.validate();
  pose.validate();
  GeometryRender out;
  out.depth = {cam, pose, ImageF(cam.width, cam.height, 1, std::numeric_limits<float>::infinity())};
  out.normal = {cam, pose, ImageF(cam.width, cam.height, 3, 0.0f)};
  out.face_id = ImageI32(cam.width, cam.height, 1, kNoFace);

  parallel_rows(cam.height, threads, [&](int y) {
    for (int x = 0; x < cam.width; ++x) {
      Ray ray = pixel_to_ray(cam, pose, x, y);
      RayHit hit = bvh.raycast(ray.origin, ray.dir);
      if (!hit.hit()) continue;
      out.depth.image.at(x, y) = static_cast<float>(hit.t);
      out.face_id.at(x, y) = hit.face;
      Vec3 n = mesh.face_normal(hit.face);
      if (n.dot(ray.dir) > 0.0) n = -n;  // face the ray origin
      out.normal.image.at(x, y, 0) = static_cast<float>(n.x());
      out.normal.image.at(x, y, 1) = static_cast<float>(n.y());
      out.normal.image.at(x, y, 2) = static_cast<float>(n.z());
    }
  });
  return out;
}

GeometryRender render_geometry(const TriMesh& mesh, const EquirectCamera& cam, const Pose& pose,
                               int threads) {
  Bvh bvh(mesh);
  return render_geometry(mesh, bvh, cam, pose, threads);
}

}  // namespace sdm
