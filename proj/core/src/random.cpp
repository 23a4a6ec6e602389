#include "rblse/random.hpp"

namespace rblse::rng {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t state = base;
  std::uint64_t mixed = splitmix64_next(state);
  state = mixed ^ stream;
  return splitmix64_next(state);
}

double Stream::uniform01() {
  // Top 53 bits -> [0, 1); exact and platform independent.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

RealMatrix Stream::uniform_matrix(Index rows, Index cols) {
  RealMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      out(i, j) = uniform01();
    }
  }
  return out;
}

RBMatrix Stream::uniform_rb_matrix(Index rows, Index cols) {
  RealMatrix m0 = uniform_matrix(rows, cols);
  RealMatrix m1 = uniform_matrix(rows, cols);
  RealMatrix m2 = uniform_matrix(rows, cols);
  RealMatrix m3 = uniform_matrix(rows, cols);
  return RBMatrix(std::move(m0), std::move(m1), std::move(m2), std::move(m3));
}

}  // namespace rblse::rng
