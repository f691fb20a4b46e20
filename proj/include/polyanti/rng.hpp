#pragma once

#include <cstdint>

namespace polyanti {

// splitmix64. Fixed, fully specified algorithm so that seeded runs reproduce
// bit-for-bit across platforms and language ports; std::mt19937 distributions
// are not pinned by the standard and must not be substituted here.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Draw from [0, n), n > 0, via plain modulo. The modulo bias is irrelevant
  // at desk scale and keeps the stream portable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace polyanti
