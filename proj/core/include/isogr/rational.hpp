#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "isogr/errors.hpp"

namespace isogr {

// Exact arithmetic everywhere: arbitrary-precision integers for class
// coefficients and rationals for all linear algebra.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

// mpz_class has no long long constructor; long is 64-bit here
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline bool is_perfect_square(const Int& z) {
  if (z < 0) return false;
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline Int isqrt_exact(const Int& z) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

// Parses "p/q" or "p"; used by the matrix file format.
Rat parse_rational(const std::string& tok);
std::string format_rational(const Rat& q);

}  // namespace isogr
