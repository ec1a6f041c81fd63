#pragma once

#include <cstdint>
#include <string>

namespace sdm {

// Streaming FNV-1a (64-bit). Used for content-addressed stage caching and
// deterministic dataset splits; not a cryptographic hash.
class Fnv1a {
 public:
  void update(const void* bytes, size_t size) {
    const auto* p = static_cast<const std::uint8_t*>(bytes);
    for (size_t i = 0; i < size; ++i) {
      state_ ^= p[i];
      state_ *= 0x100000001b3ull;
    }
  }
  void update(const std::string& s) { update(s.data(), s.size()); }
  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

std::uint64_t hash_bytes(const void* bytes, size_t size);
std::uint64_t hash_string(const std::string& s);

// Hashes a file's contents; throws IoError when unreadable.
std::uint64_t hash_file(const std::string& path);

std::string hash_hex(std::uint64_t h);

}  // namespace sdm
