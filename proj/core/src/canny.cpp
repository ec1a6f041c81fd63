#include "sdm/canny.hpp"

#include <cmath>

namespace sdm {

namespace {

int reflect_index(int i, int n) {
  // ... -2 -1 | 0 1 2 ... n-1 | n n+1 ... maps to 1 0 | 0 1 2 | n-1 n-2
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

int wrap_index(int i, int n) {
  i %= n;
  return i < 0 ? i + n : i;
}

}  // namespace

ImageF gaussian_blur(const ImageF& img, double sigma_px, bool wrap_horizontal) {
  if (sigma_px <= 0.0) return img;
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma_px)));
  std::vector<float> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    double w = std::exp(-(k * static_cast<double>(k)) / (2.0 * sigma_px * sigma_px));
    kernel[k + radius] = static_cast<float>(w);
    sum += w;
  }
  for (float& w : kernel) w = static_cast<float>(w / sum);

  const int w = img.width, h = img.height, ch = img.channels;
  ImageF tmp(w, h, ch), out(w, h, ch);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        float acc = 0.0f;
        for (int k = -radius; k <= radius; ++k) {
          int xi = wrap_horizontal ? wrap_index(x + k, w) : reflect_index(x + k, w);
          acc += kernel[k + radius] * img.at(xi, y, c);
        }
        tmp.at(x, y, c) = acc;
      }
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        float acc = 0.0f;
        for (int k = -radius; k <= radius; ++k) {
          int yi = reflect_index(y + k, h);
          acc += kernel[k + radius] * tmp.at(x, yi, c);
        }
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

ImageU8 canny(const ImageF& img, const CannyParams& params) {
  if (img.channels != 1) throw MismatchedInput("canny: expects a single-channel image");
  for (float v : img.data) {
    if (!std::isfinite(v)) throw MismatchedInput("canny: non-finite pixel");
  }
  if (params.low <= 0.0 || params.high < params.low) {
    throw BadThreshold("canny: need high >= low > 0");
  }
  if (params.mode == CannyThresholdMode::Percentile && params.high > 100.0) {
    throw BadThreshold("canny: percentile thresholds must be <= 100");
  }

  const int w = img.width, h = img.height;
  ImageF smooth = gaussian_blur(img, params.sigma_px, params.wrap_horizontal);

  ImageF gx(w, h, 1), gy(w, h, 1), mag(w, h, 1);
  auto sx = [&](int x, int k) {
    return params.wrap_horizontal ? wrap_index(x + k, w) : reflect_index(x + k, w);
  };
  for (int y = 0; y < h; ++y) {
    int y0 = reflect_index(y - 1, h), y1 = reflect_index(y + 1, h);
    for (int x = 0; x < w; ++x) {
      int x0 = sx(x, -1), x1 = sx(x, +1);
      float dx = (smooth.at(x1, y0) - smooth.at(x0, y0)) +
                 2.0f * (smooth.at(x1, y) - smooth.at(x0, y)) +
                 (smooth.at(x1, y1) - smooth.at(x0, y1));
      float dy = (smooth.at(x0, y1) - smooth.at(x0, y0)) +
                 2.0f * (smooth.at(x, y1) - smooth.at(x, y0)) +
                 (smooth.at(x1, y1) - smooth.at(x1, y0));
      gx.at(x, y) = dx;
      gy.at(x, y) = dy;
      mag.at(x, y) = std::hypot(dx, dy);
    }
  }

  double low = params.low, high = params.high;
  if (params.mode == CannyThresholdMode::Percentile) {
    std::vector<double> positive;
    positive.reserve(mag.data.size());
    for (float m : mag.data) {
      if (m > 0.0f) positive.push_back(m);
    }
    if (positive.empty()) return ImageU8(w, h, 1, 0);  // constant image
    low = percentile(positive, params.low);
    high = percentile(std::move(positive), params.high);
    if (high <= 0.0) return ImageU8(w, h, 1, 0);
  }

  // Non-maximum suppression with 4-direction quantization.
  ImageU8 nms(w, h, 1, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      float m = mag.at(x, y);
      if (m < low) continue;
      float dx = gx.at(x, y), dy = gy.at(x, y);
      // Quantize gradient direction to 0, 45, 90, 135 degrees.
      double angle = std::atan2(dy, dx);
      if (angle < 0) angle += M_PI;
      int dir = static_cast<int>(std::floor((angle + M_PI / 8.0) / (M_PI / 4.0))) % 4;
      int ox = 0, oy = 0;
      switch (dir) {
        case 0: ox = 1; oy = 0; break;   // horizontal gradient -> compare left/right
        case 1: ox = 1; oy = 1; break;
        case 2: ox = 0; oy = 1; break;
        case 3: ox = -1; oy = 1; break;
      }
      int xa = sx(x, ox), ya = reflect_index(y + oy, h);
      int xb = sx(x, -ox), yb = reflect_index(y - oy, h);
      if (m >= mag.at(xa, ya) && m >= mag.at(xb, yb)) {
        nms.at(x, y) = m >= high ? 2 : 1;  // 2 strong, 1 weak
      }
    }
  }

  // Hysteresis: weak pixels survive when 8-connected to a strong pixel.
  ImageU8 edges(w, h, 1, 0);
  std::vector<std::pair<int, int>> stack;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (nms.at(x, y) == 2 && !edges.at(x, y)) {
        edges.at(x, y) = 255;
        stack.push_back({x, y});
        while (!stack.empty()) {
          auto [cx, cy] = stack.back();
          stack.pop_back();
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
              if (dx == 0 && dy == 0) continue;
              int ny = cy + dy;
              if (ny < 0 || ny >= h) continue;
              int nx = params.wrap_horizontal ? wrap_index(cx + dx, w) : cx + dx;
              if (nx < 0 || nx >= w) continue;
              if (nms.at(nx, ny) && !edges.at(nx, ny)) {
                edges.at(nx, ny) = 255;
                stack.push_back({nx, ny});
              }
            }
          }
        }
      }
    }
  }
  return edges;
}

}  // namespace sdm
