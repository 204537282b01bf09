#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "isogr/ring.hpp"
#include "isogr/shapes.hpp"

namespace isogr {

// Sparse multivariate polynomial with exact int64 coefficients; every
// arithmetic step is overflow-checked and aborts rather than wrap.
// Monomials are packed one exponent per byte, variable 1 in the most
// significant byte, so lexicographic order on exponent vectors is integer
// order on keys.  At most 8 variables, exponents below 256; far beyond what
// the triangular expansion ever needs.
class SymPoly {
 public:
  using Key = std::uint64_t;
  using Terms = std::map<Key, long long, std::greater<Key>>;

  explicit SymPoly(int nvars = 1) : nvars_(nvars) {}

  static SymPoly constant(int nvars, long long c);
  static Key pack(const std::vector<int>& exps);
  static std::vector<int> unpack(Key k, int nvars);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(Key k, long long c);
  long long coeff(const std::vector<int>& exps) const;

  SymPoly operator+(const SymPoly& rhs) const;
  SymPoly operator-(const SymPoly& rhs) const;
  SymPoly operator*(const SymPoly& rhs) const;
  SymPoly scaled(long long c) const;

  // Largest monomial in lexicographic order.
  std::pair<Key, long long> leading() const;

  // The polynomial with variables i and i+1 exchanged (1-based).
  SymPoly swapped_vars(int i) const;

  bool operator==(const SymPoly& rhs) const = default;

 private:
  int nvars_;
  Terms terms_;
};

// Degree-r part of prod_i (1 + x_i t)/(1 - x_i t) in N variables; q_0 = 1.
SymPoly q_poly(int r, int N);

// Two-row function: q_a q_b + 2 sum_{i=1..b} (-1)^i q_{a+i} q_{b-i}, with
// q_pair(a, 0) = q_a and q_pair(b, a) = -q_pair(a, b).
SymPoly q_pair(int a, int b, int N);

// Pfaffian of the antisymmetric matrix [q_pair(lambda_i, lambda_j)] after
// padding lambda to even length with a zero part; computed by recursive
// first-row expansion with memoised sub-Pfaffians.
SymPoly q_lambda(const StrictPartition& lambda, int N);

// Greedy triangular peeling: repeatedly read the lex-greatest monomial
// x^lambda, divide by 2^(length), subtract that multiple of q_lambda.
// Requires p homogeneous of the given degree and inside the span of the
// q_lambda with at most nvars parts.
std::map<StrictPartition, long long> expand_in_q_basis(const SymPoly& p, int degree);

// Pieri coefficients computed entirely inside the symmetric-function ring:
// expand q_m * q_lambda(mu) and keep indices with lambda_1 <= n.  Family B
// rescales by 2^(l(lambda) - l(mu) - 1), which must be integral.
std::map<StrictPartition, long long> oracle_pieri(Family family, const StrictPartition& mu,
                                                  int m, int n);

// Smallest variable count that keeps every strict partition of the given
// degree visible: the largest l with l(l+1)/2 <= degree.
int oracle_variable_count(int degree);

}  // namespace isogr
