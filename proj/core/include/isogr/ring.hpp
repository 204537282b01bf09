#pragma once

#include <map>
#include <string>

#include "isogr/rational.hpp"
#include "isogr/shapes.hpp"

namespace isogr {

enum class Family { B, C };

inline char family_letter(Family f) { return f == Family::B ? 'B' : 'C'; }
inline char class_letter(Family f) { return f == Family::B ? 'P' : 'Q'; }
Family parse_family(const std::string& s);

// Formal integer combination of Schubert classes of one family and fixed n.
// Keys are the positive parts of the indexing sequences, kept in increasing
// lexicographic order; this is also the rendering order.
class ClassVector {
 public:
  ClassVector(Family family, int n) : family_(family), n_(n) {}

  static ClassVector unit(Family family, int n, const StrictPartition& p, Int coeff = 1);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::map<StrictPartition, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Int coeff(const StrictPartition& p) const;
  void add(const StrictPartition& p, const Int& c);

  bool operator==(const ClassVector& rhs) const = default;

 private:
  Family family_;
  int n_;
  std::map<StrictPartition, Int> terms_;
};

// Product of the class indexed by mu with the special class of a single row
// of length m.  Coefficients are 2^(delta-1) for family B and 2^epsilon for
// family C, over the skew rows lambda/mu with |lambda| = |mu| + m.
ClassVector pieri(Family family, const SignedSequence& mu, int m);

// Linear extension of pieri to a whole class vector.
ClassVector multiply_special(const ClassVector& v, int m);

// Sum over lambda of v(lambda) * w(lambda^c); the Schubert basis is
// self-dual, so unit vectors pair to 0/1.
Int pairing(const ClassVector& v, const ClassVector& w);

// Coefficient of lambda in pieri(family, mu, m): the number of points in the
// triple intersection with a general isotropic (n+1-m)-plane.
Int triple_number(Family family, const SignedSequence& mu, const SignedSequence& lambda, int m);

// "2*P[4,2,1] + 1*P[4,3]"; empty vectors render as "0".
std::string render_text(const ClassVector& v);
// {"family":"B","n":4,"terms":[{"parts":[4,2,1],"coeff":2},...]}
std::string render_json(const ClassVector& v);
ClassVector parse_json(const std::string& text);

}  // namespace isogr
