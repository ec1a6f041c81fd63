#pragma once

#include "sdm/image.hpp"

namespace sdm {

// Squared Euclidean distance transform (Felzenszwalb-Huttenlocher): distance
// from each pixel to the nearest nonzero pixel. All-zero input gives +inf.
Image<double> squared_edt(const ImageU8& mask);

// Disc morphology on binary masks, Euclidean radius in pixels.
ImageU8 dilate(const ImageU8& mask, double radius_px);
ImageU8 erode(const ImageU8& mask, double radius_px);

inline double smoothstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

// Bilinear sample with horizontally wrapped, vertically clamped coordinates
// (equirect convention). (u,v) are continuous; integer coordinates address
// pixel centers.
double bilinear_wrap(const ImageU8& img, double u, double v, int channel);
double bilinear_wrap(const ImageF& img, double u, double v, int channel);

// Box-filter downscale by an integer factor (dimensions must divide).
ImageU8 downscale(const ImageU8& img, int factor);
// Bilinear upscale to an exact target size.
ImageU8 upscale_bilinear(const ImageU8& img, int width, int height);
// Nearest-neighbor resize for masks (keeps values binary).
ImageU8 resize_nearest(const ImageU8& img, int width, int height);

}  // namespace sdm
