#pragma once

#include <optional>
#include <string>

#include "sdm/control.hpp"
#include "sdm/image.hpp"

namespace sdm {

enum class InpaintBackend { Baseline, Service };

struct ServiceOptions {
  std::string endpoint;        // e.g. http://127.0.0.1:8600
  double timeout_s = 30.0;
  int retries = 2;             // additional attempts after the first
  double backoff_s = 0.5;      // doubled per retry
  int max_concurrent = 4;
  int downscale_factor = 1;    // send 1/f resolution, upscale the reply
  std::optional<int> steps;
};

struct InpaintRequest {
  ImageU8 image;        // RGB
  ImageU8 mask;         // {0,255}, 255 = replace
  ControlImage control;
  std::string prompt;
  InpaintBackend backend = InpaintBackend::Baseline;
  std::uint64_t seed = 0;
  ServiceOptions service;
};

struct BlendParams {
  double dilate_px = 8.0;
  double feather_px = 16.0;
};

// Dispatches to the chosen backend. Output dimensions equal the input's;
// unmasked pixels are untouched by the baseline backend.
ImageU8 inpaint(const InpaintRequest& request);

struct BaselineOptions {
  double residual_tol = 1e-4;   // max |Laplacian residual| on the 0..255 scale
  int max_sweeps = 20000;
  double sor_omega = 1.9;
};

// Deterministic edge-aware harmonic fill: per channel, masked pixels solve
// Laplace's equation with Dirichlet data from unmasked pixels. Control edges
// cut the 4-neighbor links between edge and non-edge pixels, so color cannot
// diffuse across a structural line. Horizontally periodic. Masked regions
// with no boundary at all receive the global unmasked mean.
ImageU8 baseline_inpaint(const ImageU8& image, const ImageU8& mask, const ControlImage& control,
                         const BaselineOptions& options = {});

// Distance-feathered composite: alpha is 1 inside the mask dilated by
// dilate_px and falls to 0 over feather_px via smoothstep. Pixels with
// alpha == 0 are byte-identical to the original.
ImageU8 blend_inpaint(const ImageU8& original, const ImageU8& inpainted, const ImageU8& mask,
                      const BlendParams& params = {});

// The alpha field used by blend_inpaint (exposed for tests and debugging).
ImageF blend_alpha(const ImageU8& mask, const BlendParams& params, int width, int height);

}  // namespace sdm
