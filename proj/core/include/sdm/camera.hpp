#pragma once

#include "sdm/image.hpp"
#include "sdm/types.hpp"

namespace sdm {

// Camera-to-world rigid pose.
struct Pose {
  Vec3 position = Vec3::Zero();
  Quat rotation = Quat::Identity();

  void validate() const {
    if (std::abs(rotation.norm() - 1.0) > 1e-9) {
      throw ValidationError("pose: quaternion norm != 1");
    }
    if (!position.allFinite()) throw ValidationError("pose: non-finite position");
  }
};

struct EquirectCamera {
  int width = 0;
  int height = 0;

  void validate() const {
    if (width < 8 || height < 8 || width != 2 * height) {
      throw ValidationError("equirect camera: width must be 2*height, both >= 8");
    }
  }
};

struct Ray {
  Vec3 origin;
  Vec3 dir;  // unit
};

struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
  double depth = 0.0;
};

// Continuous pixel coordinates; integer (u,v) addresses a pixel whose center
// sits at (u+0.5, v+0.5) in image space. Longitude theta = 2*pi*(u+0.5)/W - pi,
// latitude phi = pi/2 - pi*(v+0.5)/H, camera-frame direction
// (cos phi cos theta, cos phi sin theta, sin phi).
Ray pixel_to_ray(const EquirectCamera& cam, const Pose& pose, double u, double v);

// Inverse of pixel_to_ray; depth is the Euclidean distance to p.
// u in (-0.5, W-0.5], v in [-0.5, H-0.5].
PixelCoord point_to_pixel(const EquirectCamera& cam, const Pose& pose, const Vec3& p);

// Posed equirectangular image.
template <typename T>
struct PanoImage {
  EquirectCamera camera;
  Pose pose;
  Image<T> image;
};

using RgbPano = PanoImage<std::uint8_t>;     // 3 channels
using MaskPano = PanoImage<std::uint8_t>;    // 1 channel, {0,255}
using DepthPano = PanoImage<float>;          // 1 channel, ray length (m), +inf = no hit
using NormalPano = PanoImage<float>;         // 3 channels, world-frame unit vectors

}  // namespace sdm
