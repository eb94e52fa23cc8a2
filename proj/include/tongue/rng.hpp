#pragma once

#include <cstdint>

namespace tongue {

/// Deterministic xoshiro256++ generator. All randomness in the project flows
/// through this class so that runs are reproducible bit-for-bit across
/// standard library implementations (std::normal_distribution is not
/// portable between vendors).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [a, b).
  double uniform(double a, double b);
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [0, n). n must be positive.
  int uniform_int(int n);

  /// Derive an independent substream. Forking does not advance this
  /// generator's own sequence predictably less; it consumes one draw.
  Rng fork(std::uint64_t tag);

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tongue
