#include "sdm/base64.hpp"

#include <array>

namespace sdm {

namespace {
constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<int, 256> decode_table() {
  std::array<int, 256> table;
  table.fill(-1);
  for (int i = 0; i < 64; ++i) table[static_cast<unsigned char>(kAlphabet[i])] = i;
  return table;
}
}  // namespace

std::string base64_encode(const std::uint8_t* bytes, size_t size) {
  std::string out;
  out.reserve((size + 2) / 3 * 4);
  for (size_t i = 0; i < size; i += 3) {
    std::uint32_t chunk = bytes[i] << 16;
    if (i + 1 < size) chunk |= bytes[i + 1] << 8;
    if (i + 2 < size) chunk |= bytes[i + 2];
    out.push_back(kAlphabet[(chunk >> 18) & 0x3f]);
    out.push_back(kAlphabet[(chunk >> 12) & 0x3f]);
    out.push_back(i + 1 < size ? kAlphabet[(chunk >> 6) & 0x3f] : '=');
    out.push_back(i + 2 < size ? kAlphabet[chunk & 0x3f] : '=');
  }
  return out;
}

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  return base64_encode(bytes.data(), bytes.size());
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  static const std::array<int, 256> table = decode_table();
  if (text.size() % 4 != 0) throw ParseError("base64: length not a multiple of 4");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (size_t i = 0; i < text.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      char c = text[i + k];
      if (c == '=') {
        if (i + 4 != text.size() || k < 2) throw ParseError("base64: bad padding");
        vals[k] = 0;
        ++pad;
      } else {
        if (pad) throw ParseError("base64: data after padding");
        vals[k] = table[static_cast<unsigned char>(c)];
        if (vals[k] < 0) throw ParseError("base64: invalid character");
      }
    }
    std::uint32_t chunk = (vals[0] << 18) | (vals[1] << 12) | (vals[2] << 6) | vals[3];
    out.push_back((chunk >> 16) & 0xff);
    if (pad < 2) out.push_back((chunk >> 8) & 0xff);
    if (pad < 1) out.push_back(chunk & 0xff);
  }
  return out;
}

}  // namespace sdm
