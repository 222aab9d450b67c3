#pragma once

#include <cmath>
#include <cstdint>

namespace quonhom {

// Counter-based generator: splitmix64 applied to an incrementing counter.
// Streams for individual Monte Carlo samples are derived from
// (seed, sample index), so the draws of one sample never depend on how the
// ensemble is split across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : counter_(mix(seed ^ kStreamSalt)) {}

  static RngStream for_sample(std::uint64_t seed, std::uint64_t index) {
    return RngStream(mix(seed + kGolden * (index + 1)));
  }

  std::uint64_t next_u64() {
    counter_ += kGolden;
    return mix(counter_);
  }

  // uniform on [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller; the paired draw is cached
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double a = kTwoPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ull;
  static constexpr double kTwoPi = 6.283185307179586476925;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t counter_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace quonhom
