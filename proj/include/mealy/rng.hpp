#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace mealy {

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; bounded draws and unit doubles are
// derived here by hand so transcripts are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). Draws nothing for n == 1.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit) return x % n;
    }
  }

  int index(std::size_t n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  // Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over a byte string; used to fan a master seed out into
// per-cell seeds in a platform-independent way.
inline std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed = 1469598103934665603ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mealy
