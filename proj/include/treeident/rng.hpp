#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace treeident {

// Seeded generator with hand-rolled draws so that streams are identical
// across standard library implementations (std::*_distribution is not
// portable between them).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  /// Standard normal via Box-Muller (one draw per call, second discarded).
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace treeident
