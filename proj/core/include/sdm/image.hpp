#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "sdm/types.hpp"

namespace sdm {

// Row-major interleaved image. T is uint8_t for 8-bit images and float for
// depth/normal/loss buffers.
template <typename T>
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<T> data;

  Image() = default;
  Image(int w, int h, int c, T fill = T{})
      : width(w), height(h), channels(c), data(static_cast<size_t>(w) * h * c, fill) {}

  bool empty() const { return data.empty(); }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }

  T& at(int x, int y, int c = 0) {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  const T& at(int x, int y, int c = 0) const {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }

  bool same_shape(const Image& other) const {
    return width == other.width && height == other.height && channels == other.channels;
  }

  bool operator==(const Image& other) const {
    return width == other.width && height == other.height && channels == other.channels &&
           data == other.data;
  }
};

using ImageU8 = Image<std::uint8_t>;
using ImageF = Image<float>;
using ImageI32 = Image<std::int32_t>;

// True when every pixel is 0 or 255.
inline bool is_binary(const ImageU8& img) {
  return std::all_of(img.data.begin(), img.data.end(),
                     [](std::uint8_t v) { return v == 0 || v == 255; });
}

inline ImageF to_float(const ImageU8& img, float scale = 1.0f / 255.0f) {
  ImageF out(img.width, img.height, img.channels);
  for (size_t i = 0; i < img.data.size(); ++i) out.data[i] = img.data[i] * scale;
  return out;
}

inline std::uint8_t to_u8(float v) {
  float s = v * 255.0f;
  if (s <= 0.0f) return 0;
  if (s >= 255.0f) return 255;
  return static_cast<std::uint8_t>(s + 0.5f);
}

// p-th percentile (p in [0,100]) by linear interpolation over the sorted
// sample. Used for robust depth normalization and Canny threshold selection.
double percentile(std::vector<double> values, double p);

}  // namespace sdm
