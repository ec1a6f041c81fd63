#pragma once

#include <map>
#include <optional>
#include <string>

#include "sdm/image.hpp"
#include "sdm/mesh.hpp"

namespace sdm {

// Named scalar metrics for an image pair or mesh pair. PSNR of an exact match
// is +inf, serialized as the string "inf".
struct MetricReport {
  std::map<std::string, double> values;
  size_t pixels = 0;
  size_t masked_pixels = 0;
  size_t samples = 0;

  double at(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw ValidationError("metric report: missing key " + key);
    return it->second;
  }
  std::string to_json() const;
};

struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
};

// MSE / PSNR / SSIM over RGB images in [0,1], plus *_masked variants when a
// mask is given (SSIM windows are centered on masked pixels; borders use
// reflect padding so every pixel is a valid center). Throws EmptyMask when the
// mask has no true pixel.
MetricReport image_metrics(const ImageF& pred, const ImageF& target,
                           const ImageU8* mask = nullptr, const SsimParams& ssim = {});

MetricReport image_metrics_u8(const ImageU8& pred, const ImageU8& target,
                              const ImageU8* mask = nullptr);

// Mean local SSIM with window centers restricted to mask (all pixels when
// mask is null).
double ssim(const ImageF& a, const ImageF& b, const ImageU8* mask = nullptr,
            const SsimParams& params = {});

// RMS distance from points sampled uniformly by area on `candidate` to the
// nearest point of `reference`. Seeded and deterministic.
double cloud_to_mesh_rmse(const TriMesh& candidate, const TriMesh& reference, size_t n_samples,
                          std::uint64_t seed);

// Symmetric variant: mean of both directions.
double chamfer_rmse(const TriMesh& a, const TriMesh& b, size_t n_samples, std::uint64_t seed);

}  // namespace sdm
