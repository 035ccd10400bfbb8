#ifndef POLARMAC_RNG_HPP
#define POLARMAC_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

#include "polarmac/errors.hpp"

namespace polarmac {

// Deterministic random source. Bounded draws are built on the raw
// mt19937_64 output stream (which the standard pins down exactly) via
// rejection sampling, so the same seed yields the same values on every
// platform; std::uniform_int_distribution would not guarantee that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw EngineError("Rng::below(0)");
    const std::uint64_t limit = (UINT64_MAX / n) * n;
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % n;
  }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives a sub-seed from a master seed and a tag path, so per-task
/// generators can be split deterministically regardless of evaluation order.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (std::uint64_t p : parts) h = splitmix64(h ^ splitmix64(p));
  return h;
}

}  // namespace polarmac

#endif
