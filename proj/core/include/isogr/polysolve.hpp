#pragma once

#include <vector>

#include "isogr/rational.hpp"

namespace isogr {

// Univariate polynomial over Q, coefficients ascending (p[i] multiplies x^i).
using UniPoly = std::vector<Rat>;

int degree(const UniPoly& p);             // -1 for the zero polynomial
Rat eval(const UniPoly& p, const Rat& x);
UniPoly derivative(const UniPoly& p);
UniPoly mul(const UniPoly& a, const UniPoly& b);
UniPoly sub(const UniPoly& a, const UniPoly& b);
// remainder of a by b (b nonzero)
UniPoly rem(const UniPoly& a, const UniPoly& b);
UniPoly poly_gcd(UniPoly a, UniPoly b);   // monic

// Rational with the smallest denominator in the closed interval [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi);

struct RootReport {
  std::vector<Rat> roots;     // distinct rational real roots, ascending
  int real_count = 0;         // distinct real roots of the square-free part
  int sf_degree = 0;          // degree of the square-free part
  bool repeated = false;      // gcd(p, p') nontrivial
  bool all_real_rational() const { return static_cast<int>(roots.size()) == real_count; }
  // every complex root accounted for by a rational one
  bool split_over_q() const { return static_cast<int>(roots.size()) == sf_degree; }
};

// All rational roots of p (degree >= 1), with enough bookkeeping to tell
// whether anything irrational or repeated was present.
RootReport rational_roots(const UniPoly& p);

// Homogeneous binary form in (s, t) of degree d, stored as d+1 coefficients,
// entry i multiplying s^(d-i) t^i.
using BiForm = std::vector<Rat>;

BiForm biform_mul(const BiForm& a, const BiForm& b);
BiForm biform_sub(const BiForm& a, const BiForm& b);
bool biform_is_zero(const BiForm& f);

// Resultant in x of two quadratics a_i x^2 + b_i x + c_i whose coefficients
// are binary forms (deg 0, 1, 2 respectively), yielding a quartic form:
// (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1).
BiForm conic_resultant(const Rat& a1, const BiForm& b1, const BiForm& c1,
                       const Rat& a2, const BiForm& b2, const BiForm& c2);

struct ProjectiveRoots {
  // normalized (s, t) pairs with first nonzero entry 1
  std::vector<std::pair<Rat, Rat>> points;
  bool all_rational = true;
  bool repeated = false;
  bool identically_zero = false;
};

// Projective zeros (s : t) of a binary form over Q.
ProjectiveRoots binary_form_roots(const BiForm& f);

}  // namespace isogr
