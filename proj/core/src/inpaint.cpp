#include "sdm/inpaint.hpp"

#include <cmath>

#include "sdm/image_ops.hpp"
#include "sdm/service_client.hpp"

namespace sdm {

namespace {

void validate_request(const InpaintRequest& req) {
  if (req.image.channels != 3) throw MismatchedInput("inpaint: image must be RGB");
  if (req.mask.channels != 1 || req.control.edges.channels != 1) {
    throw MismatchedInput("inpaint: mask and control must be single-channel");
  }
  if (req.mask.width != req.image.width || req.mask.height != req.image.height ||
      req.control.edges.width != req.image.width || req.control.edges.height != req.image.height) {
    throw MismatchedInput("inpaint: image/mask/control dimensions differ");
  }
  if (!is_binary(req.mask)) throw MismatchedInput("inpaint: mask is not binary");
}

}  // namespace

ImageU8 inpaint(const InpaintRequest& request) {
  validate_request(request);
  switch (request.backend) {
    case InpaintBackend::Baseline:
      return baseline_inpaint(request.image, request.mask, request.control);
    case InpaintBackend::Service:
      return service_inpaint(request);
  }
  throw ValidationError("inpaint: unknown backend");
}

ImageU8 baseline_inpaint(const ImageU8& image, const ImageU8& mask, const ControlImage& control,
                         const BaselineOptions& options) {
  const int w = image.width, h = image.height;
  if (mask.width != w || mask.height != h || control.edges.width != w ||
      control.edges.height != h) {
    throw MismatchedInput("baseline_inpaint: dimensions differ");
  }
  const int ch = image.channels;

  // Masked-pixel list in raster order (fixed sweep order = determinism).
  std::vector<int> masked;
  masked.reserve(1024);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (mask.at(x, y)) masked.push_back(y * w + x);
    }
  }
  if (masked.empty()) return image;

  // Global unmasked mean per channel (initial guess and isolated-region fill).
  std::vector<double> mean(ch, 0.0);
  size_t unmasked_count = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (mask.at(x, y)) continue;
      ++unmasked_count;
      for (int c = 0; c < ch; ++c) mean[c] += image.at(x, y, c);
    }
  }
  for (int c = 0; c < ch; ++c) {
    mean[c] = unmasked_count ? mean[c] / static_cast<double>(unmasked_count) : 127.0;
  }

  // Allowed 4-neighbor links: flux only between pixels on the same side of
  // the control edge set (edge pixels diffuse only along the edge).
  auto is_edge = [&](int x, int y) { return control.edges.at(x, y) != 0; };
  auto neighbors_of = [&](int x, int y, int* nx, int* ny) {
    int count = 0;
    const int dx[4] = {-1, 1, 0, 0};
    const int dy[4] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      int yy = y + dy[k];
      if (yy < 0 || yy >= h) continue;  // poles are closed
      int xx = x + dx[k];
      xx = xx < 0 ? w - 1 : (xx >= w ? 0 : xx);  // pano seam wraps
      if (is_edge(xx, yy) != is_edge(x, y)) continue;
      nx[count] = xx;
      ny[count] = yy;
      ++count;
    }
    return count;
  };

  // Flood connectivity over masked pixels to find regions with no Dirichlet
  // boundary at all.
  std::vector<int> component(static_cast<size_t>(w) * h, -1);
  std::vector<char> grounded;
  {
    std::vector<int> stack;
    int next_component = 0;
    int nx[4], ny[4];
    for (int idx : masked) {
      if (component[idx] >= 0) continue;
      int id = next_component++;
      grounded.push_back(0);
      component[idx] = id;
      stack.push_back(idx);
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        int x = cur % w, y = cur / w;
        int count = neighbors_of(x, y, nx, ny);
        for (int k = 0; k < count; ++k) {
          int nidx = ny[k] * w + nx[k];
          if (!mask.at(nx[k], ny[k])) {
            grounded[id] = 1;
          } else if (component[nidx] < 0) {
            component[nidx] = id;
            stack.push_back(nidx);
          }
        }
      }
    }
  }

  // Work buffer per channel in double, 0..255 scale.
  ImageU8 out = image;
  std::vector<double> u(static_cast<size_t>(w) * h);
  for (int c = 0; c < ch; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        int idx = y * w + x;
        u[idx] = mask.at(x, y) ? mean[c] : image.at(x, y, c);
      }
    }
    int nx[4], ny[4];
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
      for (int idx : masked) {
        if (!grounded[component[idx]]) continue;
        int x = idx % w, y = idx / w;
        int count = neighbors_of(x, y, nx, ny);
        if (count == 0) continue;
        double acc = 0.0;
        for (int k = 0; k < count; ++k) acc += u[ny[k] * w + nx[k]];
        double target = acc / count;
        u[idx] += options.sor_omega * (target - u[idx]);
      }
      if (sweep % 8 == 7 || sweep == options.max_sweeps - 1) {
        double residual = 0.0;
        for (int idx : masked) {
          if (!grounded[component[idx]]) continue;
          int x = idx % w, y = idx / w;
          int count = neighbors_of(x, y, nx, ny);
          if (count == 0) continue;
          double acc = 0.0;
          for (int k = 0; k < count; ++k) acc += u[ny[k] * w + nx[k]];
          residual = std::max(residual, std::abs(acc / count - u[idx]));
        }
        if (residual < options.residual_tol) break;
      }
    }
    for (int idx : masked) {
      int x = idx % w, y = idx / w;
      double v = grounded[component[idx]] ? u[idx] : mean[c];
      out.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v + 0.5, 0.0, 255.0));
    }
  }
  return out;
}

ImageF blend_alpha(const ImageU8& mask, const BlendParams& params, int width, int height) {
  if (mask.width != width || mask.height != height) {
    throw MismatchedInput("blend_alpha: mask dimensions differ");
  }
  if (params.dilate_px < 0 || params.feather_px < 0) {
    throw ValidationError("blend_alpha: negative radii");
  }
  Image<double> d2 = squared_edt(mask);
  ImageF alpha(width, height, 1, 0.0f);
  for (size_t i = 0; i < alpha.data.size(); ++i) {
    double d = std::sqrt(d2.data[i]);
    double a;
    if (d <= params.dilate_px) {
      a = 1.0;
    } else if (params.feather_px <= 0.0 || d >= params.dilate_px + params.feather_px) {
      a = 0.0;
    } else {
      a = smoothstep((params.dilate_px + params.feather_px - d) / params.feather_px);
    }
    alpha.data[i] = static_cast<float>(a);
  }
  return alpha;
}

ImageU8 blend_inpaint(const ImageU8& original, const ImageU8& inpainted, const ImageU8& mask,
                      const BlendParams& params) {
  if (!original.same_shape(inpainted) || mask.width != original.width ||
      mask.height != original.height) {
    throw MismatchedInput("blend_inpaint: dimensions differ");
  }
  ImageF alpha = blend_alpha(mask, params, original.width, original.height);
  ImageU8 out = original;
  for (int y = 0; y < original.height; ++y) {
    for (int x = 0; x < original.width; ++x) {
      double a = alpha.at(x, y);
      if (a <= 0.0) continue;  // bit-identical to the original
      for (int c = 0; c < original.channels; ++c) {
        if (a >= 1.0) {
          out.at(x, y, c) = inpainted.at(x, y, c);
        } else {
          double v = a * inpainted.at(x, y, c) + (1.0 - a) * original.at(x, y, c);
          out.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v + 0.5, 0.0, 255.0));
        }
      }
    }
  }
  return out;
}

}  // namespace sdm
