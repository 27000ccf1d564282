#pragma once

#include <cstdint>
#include <random>

#include "conelab/core/rational.hpp"

namespace conelab {

/// Seeded generator whose outputs depend only on the seed; the standard
/// distributions are avoided because their algorithms are unspecified.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Rational k/den with k uniform so that the result lies in [lo, hi].
  Rational uniform_rational(long lo, long hi, long den) {
    return make_rational(uniform_int(lo * den, hi * den), den);
  }

private:
  std::mt19937_64 gen_;
};

} // namespace conelab
