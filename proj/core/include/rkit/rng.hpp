#pragma once

#include <cstdint>
#include <random>

namespace rkit {

/// Deterministic random source. All randomness in the project flows through
/// this class so that a (seed, purpose) pair fully determines every draw;
/// uniform/normal are generated from raw 64-bit output (no std distributions,
/// whose sequences are implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be positive.
  int64_t uniform_int(int64_t n);

  /// Standard normal via Box-Muller (one spare cached).
  double normal();

  double normal(double mean, double std) { return mean + std * normal(); }

  /// splitmix64 finalizer; used to derive independent sub-seeds.
  static uint64_t splitmix(uint64_t x);

  /// Order-sensitive combination of a seed with a tag (image index, step, ...).
  static uint64_t mix(uint64_t seed, uint64_t tag) {
    return splitmix(seed + 0x9e3779b97f4a7c15ULL * (tag + 1));
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rkit
