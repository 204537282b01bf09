#pragma once

#include <compare>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "isogr/errors.hpp"

namespace isogr {

// Strict partition: distinct positive parts in decreasing order.  Bounds
// against an ambient n are checked where a bound exists (conversion to a
// signed sequence); the symmetric-function oracle deliberately works with
// unbounded strict partitions.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  static StrictPartition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;                      // |lambda|
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0-padded

  std::string to_string() const;           // "4,2,1" (empty -> "")

  auto operator<=>(const StrictPartition& rhs) const { return parts_ <=> rhs.parts_; }
  bool operator==(const StrictPartition& rhs) const = default;

 private:
  std::vector<int> parts_;
};

// Element of SY_n: strictly decreasing integers whose absolute values are
// exactly 1..n.  Canonically stored as (n, positive part); the signed form
// is derived on demand.
class SignedSequence {
 public:
  SignedSequence() : n_(0) {}
  SignedSequence(int n, StrictPartition positive);

  static SignedSequence parse(const std::string& text, int n);
  static SignedSequence from_partition(const StrictPartition& p, int n);
  static SignedSequence identity(int n) { return SignedSequence(n, StrictPartition{}); }

  int n() const { return n_; }
  const StrictPartition& positive() const { return positive_; }
  std::vector<int> entries() const;        // lambda_1 > ... > lambda_n
  int entry(int j) const;                  // 1-based

  int codim() const { return positive_.weight(); }
  SignedSequence complement() const;       // lambda^c_j = -lambda_{n+1-j}

  std::string to_string() const;           // "4,2,1,-3"

  auto operator<=>(const SignedSequence& rhs) const = default;

 private:
  int n_;
  StrictPartition positive_;
};

// mu <= lambda in the Bruhat order (entrywise on the full signed sequences).
bool bruhat_leq(const SignedSequence& mu, const SignedSequence& lambda);

struct Box {
  int row, col;  // 1-based
  auto operator<=>(const Box&) const = default;
};

struct Component {
  std::vector<Box> boxes;           // sorted
  int min_col = 0, max_col = 0;
  int first_row = 0, last_row = 0;
  bool meets_first_column = false;
  int row_count() const { return last_row - first_row + 1; }
  int column_count() const { return max_col - min_col + 1; }
  // col(d): the component's columns plus the column just to the left,
  // recorded as 0 when the component meets column 1.
  std::vector<int> col() const;
};

// Validated skew shape mu <= lambda with its components and fixed points.
class SkewShape {
 public:
  SkewShape(const SignedSequence& lambda, const SignedSequence& mu);

  const SignedSequence& lambda() const { return lambda_; }
  const SignedSequence& mu() const { return mu_; }
  int n() const { return lambda_.n(); }

  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<Component>& components() const { return components_; }
  // Indices j with lambda_j = mu_j (any sign), plus 0 when no component
  // meets the first column.
  const std::set<int>& fixed_points() const { return fixed_; }

  int box_count() const { return static_cast<int>(boxes_.size()); }
  int delta() const { return static_cast<int>(components_.size()); }
  int epsilon() const;                     // components avoiding column 1
  int phi() const { return static_cast<int>(fixed_.size()); }
  int occupied_columns() const;
  bool has_first_column_component() const;
  const Component* first_column_component() const;

  bool is_skew_row() const;                // signed interlacing; authoritative

  // (phi, delta, #columns); throws identity_violated if the sum is not n+1.
  std::tuple<int, int, int> column_identity() const;

  // The sets {|lambda_j|} over fixed j != 0, {0} if 0 is fixed, and col(d)
  // over components partition {0,...,n}.
  bool coverage_partition_ok() const;

  std::string render() const;              // ASCII
  std::string summary() const;             // "phi=.. delta=.. eps=.. cols=.. check=.."

 private:
  SignedSequence lambda_, mu_;
  std::vector<Box> boxes_;
  std::vector<Component> components_;
  std::set<int> fixed_;
};

inline SkewShape skew(const SignedSequence& lambda, const SignedSequence& mu) {
  return SkewShape(lambda, mu);
}

// All 2^n elements of SY_n (as positive parts), in increasing partition order.
std::vector<StrictPartition> all_strict_partitions(int n);
std::vector<SignedSequence> all_signed_sequences(int n);

}  // namespace isogr
