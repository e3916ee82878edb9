#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace densekit {

// Counter-based pseudo-random generator built on the SplitMix64 finalizer.
//
// Every draw is a pure function of (seed, stream, counter), so generators can
// be split into independent streams and individual draws addressed directly.
// Per-edge decisions made through `double_at` are independent of the order in
// which they are evaluated, which keeps generated instances identical across
// traversal orders and thread schedules.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix(mix(seed + kGolden) + kGolden * (stream + 1))), counter_(0) {}

  // Derive an independent stream (e.g. one per trial or per edge block).
  CounterRng split(std::uint64_t stream) const {
    CounterRng r(0);
    r.base_ = mix(base_ + kGolden * (stream + 1));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t at(std::uint64_t counter) const { return mix(base_ + kGolden * (counter + 1)); }

  double double_at(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return at(counter_++); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection (bound > 0).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      std::uint64_t v = next_u64();
      if (v < limit) return v % bound;
    }
  }

  double next_gaussian() {
    // Box-Muller on two fresh uniforms.
    double u1 = next_double(), u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Poisson draw; inversion for small mean, normal rounding for large mean.
  std::uint64_t next_poisson(double lambda) {
    if (lambda <= 0) return 0;
    if (lambda < 60.0) {
      double l = std::exp(-lambda), p = 1.0;
      std::uint64_t k = 0;
      do {
        ++k;
        p *= next_double();
      } while (p > l);
      return k - 1;
    }
    double v = lambda + std::sqrt(lambda) * next_gaussian();
    return v < 0 ? 0 : static_cast<std::uint64_t>(std::llround(v));
  }

  // Binomial(n, p). Exact Bernoulli summation up to 2^20 trials; beyond that
  // the count is approximated by Poisson (tiny p) or a normal round-off,
  // which is indistinguishable at the scales where enumeration is infeasible.
  std::uint64_t next_binomial(std::uint64_t n, double p) {
    if (n == 0 || p <= 0) return 0;
    if (p >= 1) return n;
    if (n <= (1ull << 20)) {
      std::uint64_t c = 0;
      for (std::uint64_t i = 0; i < n; ++i) c += next_double() < p;
      return c;
    }
    double mean = static_cast<double>(n) * p;
    if (p < 1e-4) return std::min<std::uint64_t>(n, next_poisson(mean));
    double v = mean + std::sqrt(mean * (1 - p)) * next_gaussian();
    if (v < 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::llround(v));
    return std::min(r, n);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t base_;
  std::uint64_t counter_;
};

}  // namespace densekit
