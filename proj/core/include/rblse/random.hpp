#pragma once

#include <cstdint>
#include <random>

#include "rblse/matrix.hpp"

namespace rblse::rng {

/// Deterministic randomness for experiments.
///
/// Every generated matrix gets its own stream: the stream seed is derived
/// from (base seed, stream id) with SplitMix64 mixing and drives a
/// std::mt19937_64. Uniform doubles in [0, 1) take the top 53 bits of each
/// output word, so sequences are identical on every platform.

/// SplitMix64 step (public-domain mixing constants).
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Stream seed for the given id under the given base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Stream ids, one per generated matrix slot.
inline constexpr std::uint64_t kStreamA = 1;
inline constexpr std::uint64_t kStreamB = 2;
inline constexpr std::uint64_t kStreamC = 3;
inline constexpr std::uint64_t kStreamD = 4;
inline constexpr std::uint64_t kStreamX0 = 5;
inline constexpr std::uint64_t kStreamX1 = 6;
inline constexpr std::uint64_t kStreamDeltaA = 7;
inline constexpr std::uint64_t kStreamDeltaB = 8;
inline constexpr std::uint64_t kStreamDeltaC = 9;
inline constexpr std::uint64_t kStreamDeltaD = 10;

class Stream {
 public:
  Stream(std::uint64_t base_seed, std::uint64_t stream_id)
      : gen_(derive_seed(base_seed, stream_id)) {}

  /// Uniform double in [0, 1).
  double uniform01();

  /// Row-major fill, entries uniform in [0, 1).
  RealMatrix uniform_matrix(Index rows, Index cols);

  /// Four planes filled in component order 1, i, j, k.
  RBMatrix uniform_rb_matrix(Index rows, Index cols);

 private:
  std::mt19937_64 gen_;
};

}  // namespace rblse::rng
