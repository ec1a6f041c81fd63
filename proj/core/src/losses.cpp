#include "sdm/losses.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>

namespace sdm {

namespace {

// FFTW planning is not thread-safe.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

int reflect_index(int i, int n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

std::vector<double> log_kernel(double sigma, int& radius_out) {
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  radius_out = radius;
  const int size = 2 * radius + 1;
  std::vector<double> kernel(static_cast<size_t>(size) * size);
  const double s2 = sigma * sigma;
  double sum = 0.0;
  for (int y = -radius; y <= radius; ++y) {
    for (int x = -radius; x <= radius; ++x) {
      double r2 = x * static_cast<double>(x) + y * static_cast<double>(y);
      double v = (r2 - 2.0 * s2) / (s2 * s2) * std::exp(-r2 / (2.0 * s2));
      kernel[(y + radius) * size + (x + radius)] = v;
      sum += v;
    }
  }
  // Zero-sum normalization so constant images map to zero.
  const double mean = sum / (size * static_cast<double>(size));
  for (double& v : kernel) v -= mean;
  return kernel;
}

void require_same_shape(const ImageF& a, const ImageF& b, const char* who) {
  if (!a.same_shape(b)) throw MismatchedInput(std::string(who) + ": shapes differ");
  if (a.width <= 0 || a.height <= 0) throw MismatchedInput(std::string(who) + ": empty image");
}

// r2c forward transform of one channel; output is h x (w/2+1) complex.
std::vector<std::complex<double>> fft_channel(const ImageF& img, int channel) {
  const int w = img.width, h = img.height;
  std::vector<double> in(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) in[static_cast<size_t>(y) * w + x] = img.at(x, y, channel);
  }
  std::vector<std::complex<double>> out(static_cast<size_t>(h) * (w / 2 + 1));
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_plan plan = fftw_plan_dft_r2c_2d(h, w, in.data(),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<double> ifft_c2r(std::vector<std::complex<double>> spectrum, int w, int h) {
  std::vector<double> out(static_cast<size_t>(w) * h);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_plan plan = fftw_plan_dft_c2r_2d(h, w, reinterpret_cast<fftw_complex*>(spectrum.data()),
                                          out.data(), FFTW_ESTIMATE);
    fftw_execute(plan);  // unnormalized sum over the full spectrum
    fftw_destroy_plan(plan);
  }
  return out;
}

// Column weight in the half-spectrum: interior columns stand for a conjugate
// pair in the full H x W grid.
double column_weight(int x, int w) {
  if (x == 0) return 1.0;
  if (w % 2 == 0 && x == w / 2) return 1.0;
  return 2.0;
}

}  // namespace

namespace {

// Double-precision LoG convolution; the gradient check needs the loss path to
// carry no float rounding.
std::vector<double> log_response_f64(const ImageF& img, double sigma_px) {
  if (sigma_px <= 0.0) throw ValidationError("log_response: sigma must be positive");
  int radius = 0;
  const std::vector<double> kernel = log_kernel(sigma_px, radius);
  const int size = 2 * radius + 1;
  const int w = img.width, h = img.height, ch = img.channels;
  std::vector<double> out(img.data.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int ky = -radius; ky <= radius; ++ky) {
          int yi = reflect_index(y + ky, h);
          for (int kx = -radius; kx <= radius; ++kx) {
            int xi = reflect_index(x + kx, w);
            // Symmetric kernel: convolution equals correlation.
            acc += kernel[(ky + radius) * size + (kx + radius)] * img.at(xi, yi, c);
          }
        }
        out[(static_cast<size_t>(y) * w + x) * ch + c] = acc;
      }
    }
  }
  return out;
}

}  // namespace

ImageF log_response(const ImageF& img, double sigma_px) {
  std::vector<double> r = log_response_f64(img, sigma_px);
  ImageF out(img.width, img.height, img.channels);
  for (size_t i = 0; i < r.size(); ++i) out.data[i] = static_cast<float>(r[i]);
  return out;
}

double contrast_loss(const ImageF& pred, const ImageF& target, double sigma_px) {
  require_same_shape(pred, target, "contrast_loss");
  std::vector<double> rp = log_response_f64(pred, sigma_px);
  std::vector<double> rt = log_response_f64(target, sigma_px);
  double sum = 0.0;
  for (size_t i = 0; i < rp.size(); ++i) sum += std::abs(rp[i] - rt[i]);
  return sum / static_cast<double>(rp.size());
}

LossWithGrad contrast_loss_grad(const ImageF& pred, const ImageF& target, double sigma_px) {
  require_same_shape(pred, target, "contrast_loss_grad");
  int radius = 0;
  const std::vector<double> kernel = log_kernel(sigma_px, radius);
  const int size = 2 * radius + 1;
  const int w = pred.width, h = pred.height, ch = pred.channels;

  std::vector<double> rp = log_response_f64(pred, sigma_px);
  std::vector<double> rt = log_response_f64(target, sigma_px);
  const double inv_n = 1.0 / static_cast<double>(rp.size());

  LossWithGrad out;
  out.grad = ImageF(w, h, ch, 0.0f);
  // Adjoint of the reflective-border convolution: scatter each response
  // pixel's sign back through the kernel taps.
  std::vector<double> grad(rp.size(), 0.0);
  double loss = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        size_t ri = (static_cast<size_t>(y) * w + x) * ch + c;
        double diff = rp[ri] - rt[ri];
        loss += std::abs(diff);
        // Subgradient 0 at the kink.
        double s = diff > 0.0 ? inv_n : (diff < 0.0 ? -inv_n : 0.0);
        if (s == 0.0) continue;
        for (int ky = -radius; ky <= radius; ++ky) {
          int yi = reflect_index(y + ky, h);
          for (int kx = -radius; kx <= radius; ++kx) {
            int xi = reflect_index(x + kx, w);
            grad[(static_cast<size_t>(yi) * w + xi) * ch + c] +=
                s * kernel[(ky + radius) * size + (kx + radius)];
          }
        }
      }
    }
  }
  out.loss = loss * inv_n;
  for (size_t i = 0; i < grad.size(); ++i) out.grad.data[i] = static_cast<float>(grad[i]);
  return out;
}

SpectralPair magnitude_spectra(const ImageF& pred, const ImageF& target) {
  require_same_shape(pred, target, "magnitude_spectra");
  if (pred.channels != 1) throw MismatchedInput("magnitude_spectra: single channel only");
  auto sp = fft_channel(pred, 0);
  auto st = fft_channel(target, 0);
  const int cols = pred.width / 2 + 1;
  SpectralPair pair;
  pair.pred_magnitude = Image<double>(cols, pred.height, 1);
  pair.target_magnitude = Image<double>(cols, pred.height, 1);
  for (size_t i = 0; i < sp.size(); ++i) {
    pair.pred_magnitude.data[i] = std::abs(sp[i]);
    pair.target_magnitude.data[i] = std::abs(st[i]);
  }
  return pair;
}

namespace {

struct FftmaxAccumulator {
  double loss = 0.0;
  // Per-bin complex factor for the gradient (zero for inactive bins).
  std::vector<std::complex<double>> factors;
};

FftmaxAccumulator fftmax_eval(const ImageF& pred, const ImageF& target, double eps,
                              bool want_grad) {
  const int w = pred.width, h = pred.height;
  const int cols = w / 2 + 1;
  const double n_bins = static_cast<double>(w) * h;

  double loss = 0.0;
  FftmaxAccumulator acc;
  for (int c = 0; c < pred.channels; ++c) {
    ImageF pc(w, h, 1), tc(w, h, 1);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        pc.at(x, y) = pred.at(x, y, c);
        tc.at(x, y) = target.at(x, y, c);
      }
    }
    auto sp = fft_channel(pc, 0);
    auto st = fft_channel(tc, 0);

    double max_t = 0.0;
    for (const auto& v : st) max_t = std::max(max_t, std::abs(v));
    const double guard = eps > 0.0 ? eps : std::max(1e-8 * max_t, 1e-300);

    if (want_grad && acc.factors.empty()) {
      acc.factors.assign(sp.size() * pred.channels, {0.0, 0.0});
    }
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < cols; ++x) {
        size_t i = static_cast<size_t>(y) * cols + x;
        double mp = std::abs(sp[i]);
        double mt = std::abs(st[i]);
        if (mp <= mt) continue;
        double denom = std::max(mt, guard);
        double r = (mp - mt) / denom;
        double weight = column_weight(x, w);
        loss += weight * r * r;
        if (want_grad && mp > 0.0) {
          // dL/dP_k = 2 r / denom * P_k / |P_k| (per full-grid bin).
          acc.factors[c * sp.size() + i] = (2.0 * r / denom) * (sp[i] / mp);
        }
      }
    }
  }
  acc.loss = loss / (n_bins * pred.channels);
  return acc;
}

}  // namespace

double fftmax_loss(const ImageF& pred, const ImageF& target, double eps) {
  require_same_shape(pred, target, "fftmax_loss");
  return fftmax_eval(pred, target, eps, /*want_grad=*/false).loss;
}

LossWithGrad fftmax_loss_grad(const ImageF& pred, const ImageF& target, double eps) {
  require_same_shape(pred, target, "fftmax_loss_grad");
  FftmaxAccumulator acc = fftmax_eval(pred, target, eps, /*want_grad=*/true);
  const int w = pred.width, h = pred.height;
  const int cols = w / 2 + 1;
  const double scale = 1.0 / (static_cast<double>(w) * h * pred.channels);

  LossWithGrad out;
  out.loss = acc.loss;
  out.grad = ImageF(w, h, pred.channels, 0.0f);
  if (acc.factors.empty()) return out;
  const size_t bins = static_cast<size_t>(h) * cols;
  for (int c = 0; c < pred.channels; ++c) {
    std::vector<std::complex<double>> g(acc.factors.begin() + c * bins,
                                        acc.factors.begin() + (c + 1) * bins);
    // The inverse c2r transform sums the hermitian full grid, which matches
    // the column weights used in the loss.
    std::vector<double> grad = ifft_c2r(std::move(g), w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        out.grad.at(x, y, c) = static_cast<float>(grad[static_cast<size_t>(y) * w + x] * scale);
      }
    }
  }
  return out;
}

double grad_check(const std::function<LossWithGrad(const ImageF&)>& loss_fn, const ImageF& pred,
                  double step) {
  LossWithGrad analytic = loss_fn(pred);
  double scale = 0.0;
  for (float g : analytic.grad.data) scale = std::max(scale, std::abs(static_cast<double>(g)));
  if (scale <= 0.0) scale = 1.0;

  double worst = 0.0;
  ImageF probe = pred;
  for (size_t i = 0; i < pred.data.size(); ++i) {
    const float up_val = pred.data[i] + static_cast<float>(step);
    const float down_val = pred.data[i] - static_cast<float>(step);
    probe.data[i] = up_val;
    double up = loss_fn(probe).loss;
    probe.data[i] = down_val;
    double down = loss_fn(probe).loss;
    probe.data[i] = pred.data[i];
    // Divide by the representable perturbation, not the nominal step; float
    // storage would otherwise dominate the difference quotient.
    double fd = (up - down) / (static_cast<double>(up_val) - down_val);
    worst = std::max(worst, std::abs(fd - analytic.grad.data[i]) / scale);
  }
  return worst;
}

}  // namespace sdm
