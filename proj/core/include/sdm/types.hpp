#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdm {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;

// Per-face semantic tag. Values match the PLY `label` face property.
enum class FaceLabel : std::uint8_t { Unknown = 0, Structure = 1, Furniture = 2 };

// Structural class of a fitted plane.
enum class PlaneClass : std::uint8_t { Floor, Wall, Ceiling, Other };

const char* to_string(FaceLabel label);
const char* to_string(PlaneClass cls);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};
class ValidationError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};
class DegenerateInput : public Error {
 public:
  using Error::Error;
};
class OutOfBounds : public Error {
 public:
  using Error::Error;
};
class MismatchedInput : public Error {
 public:
  using Error::Error;
};
class BadThreshold : public Error {
 public:
  using Error::Error;
};
class EmptyMask : public Error {
 public:
  using Error::Error;
};
class SpecError : public Error {
 public:
  using Error::Error;
};
class MissingOutput : public Error {
 public:
  using Error::Error;
};
class AtlasOverflow : public Error {
 public:
  using Error::Error;
};
class RefusesFurnished : public Error {
 public:
  using Error::Error;
};
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

class BackendError : public Error {
 public:
  BackendError(int status, const std::string& message)
      : Error("backend error (status " + std::to_string(status) + "): " + message),
        status_(status) {}
  int status() const { return status_; }

 private:
  int status_ = 0;
};

}  // namespace sdm
