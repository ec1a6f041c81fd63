#pragma once

#include <functional>

#include "sdm/image.hpp"

namespace sdm {

// Magnitude spectra of a prediction/target pair, real-to-complex half-spectrum
// layout (height x (width/2 + 1)).
struct SpectralPair {
  Image<double> pred_magnitude;
  Image<double> target_magnitude;
};

// Laplacian-of-Gaussian response: convolution with the zero-sum-normalized
// discrete LoG kernel (radius ceil(3*sigma)), reflective borders.
ImageF log_response(const ImageF& img, double sigma_px);

// Mean absolute difference of the LoG responses of both images.
double contrast_loss(const ImageF& pred, const ImageF& target, double sigma_px);

struct LossWithGrad {
  double loss = 0.0;
  ImageF grad;  // d loss / d pred
};

LossWithGrad contrast_loss_grad(const ImageF& pred, const ImageF& target, double sigma_px);

// One-sided relative spectral excess: per frequency bin,
// ((|P| - |T|) / max(|T|, eps))^2 where |P| > |T|, else 0, averaged over the
// full H x W frequency grid (DC included). eps <= 0 selects the default
// 1e-8 * max |T|.
double fftmax_loss(const ImageF& pred, const ImageF& target, double eps = 0.0);

LossWithGrad fftmax_loss_grad(const ImageF& pred, const ImageF& target, double eps = 0.0);

SpectralPair magnitude_spectra(const ImageF& pred, const ImageF& target);

// Central-difference validation of an analytic gradient. Returns the max
// component error relative to the gradient's max magnitude.
double grad_check(const std::function<LossWithGrad(const ImageF&)>& loss_fn, const ImageF& pred,
                  double step);

}  // namespace sdm
