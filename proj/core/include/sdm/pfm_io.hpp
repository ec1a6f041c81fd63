#pragma once

#include <string>

#include "sdm/image.hpp"

namespace sdm {

// Portable FloatMap, little-endian, 1 channel ("Pf") or 3 channels ("PF").
// Rows are stored bottom-up per the format; Image rows are top-down.
void save_pfm(const ImageF& img, const std::string& path);
ImageF load_pfm(const std::string& path);

}  // namespace sdm
