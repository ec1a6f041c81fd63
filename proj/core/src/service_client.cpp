#include "sdm/service_client.hpp"

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "sdm/base64.hpp"
#include "sdm/image_ops.hpp"
#include "sdm/png_io.hpp"

namespace sdm {

namespace {

using nlohmann::json;

// Global concurrent-request cap shared by all worker threads.
class RequestGate {
 public:
  void configure(int limit) {
    std::lock_guard<std::mutex> lock(mutex_);
    limit_ = std::max(1, limit);
  }
  void acquire() {
    std::unique_lock<std::mutex> lock(mutex_);
    cv_.wait(lock, [&] { return active_ < limit_; });
    ++active_;
  }
  void release() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      --active_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int limit_ = 4;
  int active_ = 0;
};

RequestGate& gate() {
  static RequestGate instance;
  return instance;
}

struct GateScope {
  GateScope() { gate().acquire(); }
  ~GateScope() { gate().release(); }
};

}  // namespace

bool service_healthy(const ServiceOptions& options) {
  httplib::Client client(options.endpoint);
  client.set_connection_timeout(std::chrono::milliseconds(
      static_cast<int>(options.timeout_s * 1000)));
  auto res = client.Get("/v1/health");
  return res && res->status == 200;
}

ImageU8 service_inpaint(const InpaintRequest& request) {
  const ServiceOptions& opt = request.service;
  if (opt.endpoint.empty()) throw BackendUnavailable("service backend: no endpoint configured");
  gate().configure(opt.max_concurrent);

  // Optionally reduce resolution before sending.
  ImageU8 image = request.image;
  ImageU8 mask = request.mask;
  ImageU8 control = request.control.edges;
  const int full_w = image.width, full_h = image.height;
  if (opt.downscale_factor > 1) {
    image = downscale(image, opt.downscale_factor);
    mask = resize_nearest(mask, image.width, image.height);
    control = resize_nearest(control, image.width, image.height);
  }

  json body;
  body["image_png_b64"] = base64_encode(encode_png(image));
  body["mask_png_b64"] = base64_encode(encode_png(mask));
  body["control_png_b64"] = base64_encode(encode_png(control));
  body["prompt"] = request.prompt;
  body["seed"] = request.seed;
  if (opt.steps) body["steps"] = *opt.steps;
  const std::string payload = body.dump();

  std::string last_failure = "no attempt made";
  const int attempts = std::max(1, opt.retries + 1);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      double delay = opt.backoff_s * std::pow(2.0, attempt - 1);
      std::this_thread::sleep_for(std::chrono::duration<double>(delay));
    }
    httplib::Client client(opt.endpoint);
    auto timeout = std::chrono::milliseconds(static_cast<int>(opt.timeout_s * 1000));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);

    httplib::Result res = [&]() {
      GateScope scope;
      return client.Post("/v1/inpaint", payload, "application/json");
    }();

    if (!res) {
      last_failure = "connection failed or timed out (" + httplib::to_string(res.error()) + ")";
      continue;  // retryable
    }
    if (res->status >= 500) {
      last_failure = "server error " + std::to_string(res->status);
      continue;  // retryable
    }
    if (res->status != 200) {
      throw BackendError(res->status, res->body.substr(0, 200));
    }

    json reply;
    try {
      reply = json::parse(res->body);
    } catch (const json::exception& e) {
      throw BackendError(res->status, std::string("unparseable reply: ") + e.what());
    }
    if (reply.contains("error")) {
      throw BackendError(res->status, reply["error"].get<std::string>());
    }
    if (!reply.contains("image_png_b64")) {
      throw BackendError(res->status, "reply missing image_png_b64");
    }
    ImageU8 result;
    try {
      auto bytes = base64_decode(reply["image_png_b64"].get<std::string>());
      result = decode_png(bytes.data(), bytes.size());
    } catch (const Error& e) {
      throw BackendError(res->status, std::string("bad reply image: ") + e.what());
    }
    if (result.width != image.width || result.height != image.height || result.channels != 3) {
      throw BackendError(res->status, "reply dimensions " + std::to_string(result.width) + "x" +
                                          std::to_string(result.height) + " do not match request " +
                                          std::to_string(image.width) + "x" +
                                          std::to_string(image.height));
    }
    if (opt.downscale_factor > 1) {
      result = upscale_bilinear(result, full_w, full_h);
    }
    return result;
  }
  throw BackendUnavailable("service backend unreachable after " + std::to_string(attempts) +
                           " attempts: " + last_failure);
}

}  // namespace sdm
