#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace pathweave::rng {

// Identity string recorded in run manifests. Draws below map engine output
// to values without std::*_distribution, whose results differ between
// standard library implementations; this keeps streams byte-reproducible.
inline constexpr std::string_view kGeneratorId = "mt19937_64/canonical53";

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in the closed interval [lo, hi].
  double uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Box-Muller; the paired draw is cached, so call order alone
  // determines the stream.
  double gaussian(double mean, double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + sigma * spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return mean + sigma * r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pathweave::rng
