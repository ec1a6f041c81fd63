#pragma once

#include "sdm/inpaint.hpp"

namespace sdm {

// HTTP client for the inpainting service contract:
//   POST /v1/inpaint  {image_png_b64, mask_png_b64, control_png_b64, prompt,
//                      seed, steps?} -> {image_png_b64} | {error}
//   GET  /v1/health   -> 200
// Connection failures and 5xx responses are retried with exponential backoff;
// exhausting retries raises BackendUnavailable (no HTTP response) or
// BackendError. The reply must match the sent dimensions; with
// downscale_factor > 1 the request is sent at reduced resolution and the
// reply is bilinearly upscaled (an external super-resolution hook can replace
// this in the pipeline).
ImageU8 service_inpaint(const InpaintRequest& request);

// True when GET /v1/health answers 200.
bool service_healthy(const ServiceOptions& options);

}  // namespace sdm
