#pragma once

#include <cstdint>
#include <random>

namespace bilipkit {

/// Seeded generator. Only the raw mt19937_64 stream is used and the
/// distributions are written out here, so output does not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on {0, ..., n - 1}, n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t index(std::uint64_t n);

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bilipkit
