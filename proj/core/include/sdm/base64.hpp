#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdm/types.hpp"

namespace sdm {

std::string base64_encode(const std::uint8_t* bytes, size_t size);
std::string base64_encode(const std::vector<std::uint8_t>& bytes);

// Throws ParseError on invalid characters or padding.
std::vector<std::uint8_t> base64_decode(const std::string& text);

}  // namespace sdm
