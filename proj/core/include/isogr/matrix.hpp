#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "isogr/rational.hpp"

namespace isogr {

// Dense matrix over Q.  Everything here is exact; rank and kernel queries
// are the workhorses of Schubert membership testing.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  void set_row(int i, const Vec& v);

  Matrix transposed() const;
  Matrix stacked(const Matrix& below) const;
  Matrix columns(const std::vector<int>& idx) const;

  Matrix operator*(const Matrix& rhs) const;

  bool operator==(const Matrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> rref();

  int rank() const;

  // Basis (as rows) of { x : M x = 0 }.
  Matrix right_kernel() const;
  // Basis (as rows) of { y : y M = 0 }.
  Matrix left_kernel() const { return transposed().right_kernel(); }

  // One solution of M x = b, if any.
  std::optional<Vec> solve(const Vec& b) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Vec operator*(const Matrix& m, const Vec& v);
Vec row_times(const Vec& v, const Matrix& m);
Rat dot(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rat& c);
Vec added(const Vec& a, const Vec& b);

// Row space of a rational matrix kept in reduced echelon normal form, so two
// subspaces are equal iff their representations are equal.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  Subspace(int ambient, const std::vector<Vec>& rows);

  static Subspace zero(int ambient) { return Subspace(ambient, {}); }
  static Subspace span_of(const Matrix& rows);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& rhs) const { return ambient_ == rhs.ambient_ && basis_ == rhs.basis_; }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  int intersection_dim(const Subspace& other) const;

  // Intersection with the coordinate subspace spanned by `coords`.
  Subspace coordinate_slice(const std::vector<int>& coords) const;

 private:
  int ambient_;
  Matrix basis_;
};

}  // namespace isogr
