#include "sdm/hash.hpp"

#include <cstdio>

#include "sdm/types.hpp"

namespace sdm {

std::uint64_t hash_bytes(const void* bytes, size_t size) {
  Fnv1a h;
  h.update(bytes, size);
  return h.digest();
}

std::uint64_t hash_string(const std::string& s) { return hash_bytes(s.data(), s.size()); }

std::uint64_t hash_file(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("hash_file: cannot open " + path);
  Fnv1a h;
  char buf[65536];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) h.update(buf, n);
  std::fclose(f);
  return h.digest();
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace sdm
