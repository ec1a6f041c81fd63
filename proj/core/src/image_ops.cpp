#include "sdm/image_ops.hpp"

#include <cmath>

namespace sdm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1D squared-distance transform of a sampled function (lower envelope of
// parabolas), after Felzenszwalb & Huttenlocher.
void dt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
           std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s;
    while (true) {
      if (f[v[k]] == kInf) {
        // No finite parabola yet; replace.
        if (k == 0) {
          v[0] = q;
          z[0] = -kInf;
          z[1] = kInf;
          break;
        }
        --k;
        continue;
      }
      s = ((f[q] + q * static_cast<double>(q)) - (f[v[k]] + v[k] * static_cast<double>(v[k]))) /
          (2.0 * q - 2.0 * v[k]);
      if (s <= z[k]) {
        --k;
      } else {
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
        break;
      }
    }
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    double dq = q - static_cast<double>(v[k]);
    d[q] = f[v[k]] == kInf ? kInf : dq * dq + f[v[k]];
  }
}

}  // namespace

Image<double> squared_edt(const ImageU8& mask) {
  const int w = mask.width, h = mask.height;
  Image<double> dist(w, h, 1, kInf);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (mask.at(x, y)) dist.at(x, y) = 0.0;
    }
  }
  const int n = std::max(w, h);
  std::vector<double> z(n + 1);
  std::vector<int> v(n);
  // Columns, then rows.
  {
    std::vector<double> f(h), d(h);
    for (int x = 0; x < w; ++x) {
      for (int y = 0; y < h; ++y) f[y] = dist.at(x, y);
      dt_1d(f, d, v, z);
      for (int y = 0; y < h; ++y) dist.at(x, y) = d[y];
    }
  }
  {
    std::vector<double> f(w), d(w);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) f[x] = dist.at(x, y);
      dt_1d(f, d, v, z);
      for (int x = 0; x < w; ++x) dist.at(x, y) = d[x];
    }
  }
  return dist;
}

ImageU8 dilate(const ImageU8& mask, double radius_px) {
  if (radius_px <= 0.0) return mask;
  Image<double> d2 = squared_edt(mask);
  ImageU8 out(mask.width, mask.height, 1, 0);
  const double r2 = radius_px * radius_px;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = d2.data[i] <= r2 ? 255 : 0;
  return out;
}

ImageU8 erode(const ImageU8& mask, double radius_px) {
  if (radius_px <= 0.0) return mask;
  ImageU8 inverse(mask.width, mask.height, 1);
  for (size_t i = 0; i < mask.data.size(); ++i) inverse.data[i] = mask.data[i] ? 0 : 255;
  Image<double> d2 = squared_edt(inverse);
  ImageU8 out(mask.width, mask.height, 1, 0);
  const double r2 = radius_px * radius_px;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = d2.data[i] > r2 ? 255 : 0;
  return out;
}

namespace {

template <typename T>
double bilinear_wrap_impl(const Image<T>& img, double u, double v, int channel) {
  const int w = img.width, h = img.height;
  double x = u - 0.0;  // integer coords address pixel centers already
  double y = std::clamp(v, 0.0, static_cast<double>(h - 1));
  double fx = std::floor(x);
  double fy = std::floor(y);
  double ax = x - fx, ay = y - fy;
  int x0 = static_cast<int>(fx);
  int x1 = x0 + 1;
  int y0 = static_cast<int>(fy);
  int y1 = std::min(y0 + 1, h - 1);
  auto wrap = [&](int xi) {
    xi %= w;
    return xi < 0 ? xi + w : xi;
  };
  x0 = wrap(x0);
  x1 = wrap(x1);
  double v00 = img.at(x0, y0, channel), v10 = img.at(x1, y0, channel);
  double v01 = img.at(x0, y1, channel), v11 = img.at(x1, y1, channel);
  return (v00 * (1 - ax) + v10 * ax) * (1 - ay) + (v01 * (1 - ax) + v11 * ax) * ay;
}

}  // namespace

double bilinear_wrap(const ImageU8& img, double u, double v, int channel) {
  return bilinear_wrap_impl(img, u, v, channel);
}
double bilinear_wrap(const ImageF& img, double u, double v, int channel) {
  return bilinear_wrap_impl(img, u, v, channel);
}

ImageU8 downscale(const ImageU8& img, int factor) {
  if (factor <= 1) return img;
  if (img.width % factor != 0 || img.height % factor != 0) {
    throw MismatchedInput("downscale: dimensions not divisible by factor");
  }
  ImageU8 out(img.width / factor, img.height / factor, img.channels);
  const int area = factor * factor;
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        int sum = 0;
        for (int dy = 0; dy < factor; ++dy) {
          for (int dx = 0; dx < factor; ++dx) {
            sum += img.at(x * factor + dx, y * factor + dy, c);
          }
        }
        out.at(x, y, c) = static_cast<std::uint8_t>((sum + area / 2) / area);
      }
    }
  }
  return out;
}

ImageU8 upscale_bilinear(const ImageU8& img, int width, int height) {
  ImageU8 out(width, height, img.channels);
  const double sx = static_cast<double>(img.width) / width;
  const double sy = static_cast<double>(img.height) / height;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double u = (x + 0.5) * sx - 0.5;
      double v = (y + 0.5) * sy - 0.5;
      for (int c = 0; c < img.channels; ++c) {
        double s = bilinear_wrap(img, u, v, c);
        out.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(s + 0.5, 0.0, 255.0));
      }
    }
  }
  return out;
}

ImageU8 resize_nearest(const ImageU8& img, int width, int height) {
  ImageU8 out(width, height, img.channels);
  for (int y = 0; y < height; ++y) {
    int sy = std::min(static_cast<int>((y + 0.5) * img.height / height), img.height - 1);
    for (int x = 0; x < width; ++x) {
      int sx = std::min(static_cast<int>((x + 0.5) * img.width / width), img.width - 1);
      for (int c = 0; c < img.channels; ++c) out.at(x, y, c) = img.at(sx, sy, c);
    }
  }
  return out;
}

}  // namespace sdm
