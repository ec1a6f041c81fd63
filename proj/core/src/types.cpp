#include "sdm/types.hpp"

namespace sdm {

const char* to_string(FaceLabel label) {
  switch (label) {
    case FaceLabel::Unknown: return "unknown";
    case FaceLabel::Structure: return "structure";
    case FaceLabel::Furniture: return "furniture";
  }
  return "unknown";
}

const char* to_string(PlaneClass cls) {
  switch (cls) {
    case PlaneClass::Floor: return "floor";
    case PlaneClass::Wall: return "wall";
    case PlaneClass::Ceiling: return "ceiling";
    case PlaneClass::Other: return "other";
  }
  return "other";
}

}  // namespace sdm
