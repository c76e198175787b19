#pragma once

#include <cstdint>
#include <random>

namespace pmsched {

/// Deterministic random source.  The raw mt19937_64 stream is specified by
/// the standard, and every distribution here is built directly on that
/// stream, so a (seed, call sequence) pair reproduces bit-identically on any
/// platform and standard library.  std:: distribution objects are never used.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n must be positive.
  int uniform_int(int n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % un;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= bound);
    return static_cast<int>(v % un);
  }

  /// p <= 0 and p >= 1 short-circuit without consuming the stream.
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace pmsched
