#pragma once

#include <string>
#include <vector>

#include "sdm/image.hpp"

namespace sdm {

// 8-bit PNG, 1 or 3 channels. 16-bit files are reduced to 8, palette and
// gray+alpha are expanded, alpha is stripped.
ImageU8 load_png(const std::string& path);
void save_png(const ImageU8& img, const std::string& path);

std::vector<std::uint8_t> encode_png(const ImageU8& img);
ImageU8 decode_png(const std::uint8_t* bytes, size_t size);

// Loads a mask PNG: any nonzero pixel becomes 255 (furniture), channels
// collapsed to one by max.
ImageU8 load_mask_png(const std::string& path);

}  // namespace sdm
