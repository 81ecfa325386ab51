#pragma once

// Counter-based deterministic sampling. Every sample draws from its own
// stream keyed by (seed, family, index), so results do not depend on the
// order in which threads visit indices.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "concave/types.hpp"

namespace concave {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}
  Rng(std::uint64_t seed, std::uint64_t family, std::uint64_t index)
      : state_(splitmix64(splitmix64(seed ^ splitmix64(family)) + index)) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64(state_);
  }

  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex unit_circle() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

  /// Area-uniform point of the open disk of the given radius.
  Complex disk(double radius = 1.0) { return std::polar(radius * std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform()); }

  /// Area-uniform on the closed disk with a share of forced boundary points.
  Complex disk_with_boundary(double boundary_rate = 0.1) {
    if (uniform() < boundary_rate) return unit_circle();
    return disk();
  }

  ParamTriple polydisk(double boundary_rate = 0.1) {
    const Complex a = disk_with_boundary(boundary_rate);
    const Complex b = disk_with_boundary(boundary_rate);
    const Complex c = disk_with_boundary(boundary_rate);
    return {a, b, c};
  }

 private:
  std::uint64_t state_;
};

/// Stable 64-bit key for a family name.
inline std::uint64_t family_key(const char* name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* c = name; *c != '\0'; ++c) h = (h ^ static_cast<unsigned char>(*c)) * 0x100000001b3ULL;
  return h;
}

}  // namespace concave
