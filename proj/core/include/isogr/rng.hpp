#pragma once

#include <cstdint>

#include "isogr/rational.hpp"

namespace isogr {

// splitmix64: tiny, seedable, and identical on every platform.  Standard
// <random> engines are portable but the distributions are not, and the CLI
// promises byte-identical output for identical (arguments, seed).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on [lo, hi]
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat small_rational(long bound = 9) { return Rat(uniform(-bound, bound)); }

  Rat nonzero_rational(long bound = 9) {
    for (;;) {
      Rat r = small_rational(bound);
      if (r != 0) return r;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace isogr
