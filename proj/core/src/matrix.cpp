#include "isogr/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace isogr {

Rat parse_rational(const std::string& tok) {
  try {
    Rat q;
    if (q.set_str(tok, 10) != 0) fail(errc::parse_error, "bad rational '" + tok + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "bad rational '" + tok + "'");
  }
}

std::string format_rational(const Rat& q) {
  Rat canonical = q;
  canonical.canonicalize();
  std::ostringstream os;
  os << canonical;
  return os.str();
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    require(static_cast<int>(rows[i].size()) == m.cols_, errc::wrong_dimension, "ragged rows");
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  require(cols_ == below.cols_, errc::wrong_dimension, "stack width mismatch");
  Matrix m(rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
  return m;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix m(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = at(i, idx[j]);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require(cols_ == rhs.rows_, errc::wrong_dimension, "matmul shape mismatch");
  Matrix m(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) m.at(i, j) += aik * rhs.at(k, j);
    }
  return m;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    Rat inv = 1 / at(r, c);
    for (int j = c; j < cols_; ++j) at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Rat f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.rref().size());
}

Matrix Matrix::right_kernel() const {
  Matrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(static_cast<int>(i), c);
    rows.push_back(v);
  }
  if (rows.empty()) return Matrix(0, cols_);
  return Matrix::from_rows(rows);
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  require(static_cast<int>(b.size()) == rows_, errc::wrong_dimension, "solve rhs size");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  for (int c : pivots)
    if (c == cols_) return std::nullopt;  // inconsistent
  Vec x(cols_);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), cols_);
  return x;
}

Vec operator*(const Matrix& m, const Vec& v) {
  require(static_cast<int>(v.size()) == m.cols(), errc::wrong_dimension, "matvec size");
  Vec out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Vec row_times(const Vec& v, const Matrix& m) {
  require(static_cast<int>(v.size()) == m.rows(), errc::wrong_dimension, "vecmat size");
  Vec out(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Vec scaled(const Vec& v, const Rat& c) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

Vec added(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Subspace::Subspace(int ambient, const std::vector<Vec>& rows) : ambient_(ambient) {
  for (const Vec& r : rows)
    require(static_cast<int>(r.size()) == ambient, errc::wrong_dimension, "row size vs ambient");
  Matrix m = rows.empty() ? Matrix(0, ambient) : Matrix::from_rows(rows);
  m.rref();
  // drop zero rows
  std::vector<Vec> keep;
  for (int i = 0; i < m.rows(); ++i) {
    Vec r = m.row(i);
    bool nz = false;
    for (const Rat& x : r)
      if (x != 0) { nz = true; break; }
    if (nz) keep.push_back(r);
  }
  basis_ = keep.empty() ? Matrix(0, ambient) : Matrix::from_rows(keep);
}

Subspace Subspace::span_of(const Matrix& rows) {
  std::vector<Vec> rs;
  for (int i = 0; i < rows.rows(); ++i) rs.push_back(rows.row(i));
  return Subspace(rows.cols(), rs);
}

bool Subspace::contains(const Vec& v) const {
  Matrix stacked = basis_.stacked(Matrix::from_rows({v}));
  return stacked.rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  return basis_.stacked(other.basis_).rank() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  return span_of(basis_.stacked(other.basis_));
}

int Subspace::intersection_dim(const Subspace& other) const {
  return dim() + other.dim() - basis_.stacked(other.basis_).rank();
}

Subspace Subspace::intersect(const Subspace& other) const {
  // (u, w) with u^T A = w^T B  <=>  [A^T | -B^T] (u, w)^T = 0
  const Matrix& A = basis_;
  const Matrix& B = other.basis_;
  if (A.rows() == 0 || B.rows() == 0) return Subspace::zero(ambient_);
  Matrix m(ambient_, A.rows() + B.rows());
  for (int c = 0; c < ambient_; ++c) {
    for (int i = 0; i < A.rows(); ++i) m.at(c, i) = A.at(i, c);
    for (int i = 0; i < B.rows(); ++i) m.at(c, A.rows() + i) = -B.at(i, c);
  }
  Matrix ker = m.right_kernel();
  std::vector<Vec> rows;
  for (int i = 0; i < ker.rows(); ++i) {
    Vec full = ker.row(i);
    Vec u(full.begin(), full.begin() + A.rows());
    rows.push_back(row_times(u, A));
  }
  return Subspace(ambient_, rows);
}

Subspace Subspace::coordinate_slice(const std::vector<int>& coords) const {
  std::vector<bool> keep(ambient_, false);
  for (int c : coords) keep[c] = true;
  std::vector<int> outside;
  for (int c = 0; c < ambient_; ++c)
    if (!keep[c]) outside.push_back(c);
  // combos t with t * (basis restricted to outside columns) = 0
  Matrix restricted = basis_.columns(outside);
  Matrix combos = restricted.left_kernel();
  std::vector<Vec> rows;
  for (int i = 0; i < combos.rows(); ++i) rows.push_back(row_times(combos.row(i), basis_));
  return Subspace(ambient_, rows);
}

}  // namespace isogr
