#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace fintop {

/// splitmix64 finalizer; derives independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/**
 * Seeded generator with platform-independent draws.
 *
 * Wraps std::mt19937_64, whose output sequence is fixed by the standard.
 * The standard distributions are not, so integer and real draws are
 * computed here directly.
 */
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();
  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 engine_;
};

}  // namespace fintop
