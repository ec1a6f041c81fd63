#include "sdm/camera.hpp"

#include <cmath>

namespace sdm {

Ray pixel_to_ray(const EquirectCamera& cam, const Pose& pose, double u, double v) {
  if (u < 0.0 || u >= cam.width || v < 0.0 || v >= cam.height) {
    throw OutOfBounds("pixel_to_ray: pixel (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") outside " + std::to_string(cam.width) + "x" + std::to_string(cam.height));
  }
  const double theta = 2.0 * M_PI * ((u + 0.5) / cam.width) - M_PI;
  const double phi = M_PI / 2.0 - M_PI * ((v + 0.5) / cam.height);
  const double cp = std::cos(phi);
  const Vec3 cam_dir(cp * std::cos(theta), cp * std::sin(theta), std::sin(phi));
  return Ray{pose.position, pose.rotation * cam_dir};
}

PixelCoord point_to_pixel(const EquirectCamera& cam, const Pose& pose, const Vec3& p) {
  const Vec3 d = p - pose.position;
  const double r = d.norm();
  if (r <= 0.0) throw DegenerateInput("point_to_pixel: point at camera center");
  const Vec3 dc = pose.rotation.conjugate() * d;
  const double phi = std::asin(std::clamp(dc.z() / r, -1.0, 1.0));
  const double theta = std::atan2(dc.y(), dc.x());
  PixelCoord out;
  out.u = (theta + M_PI) / (2.0 * M_PI) * cam.width - 0.5;
  out.v = (M_PI / 2.0 - phi) / M_PI * cam.height - 0.5;
  out.depth = r;
  return out;
}

}  // namespace sdm
