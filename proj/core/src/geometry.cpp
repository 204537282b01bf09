#include "isogr/geometry.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "geometry_detail.hpp"

namespace isogr {

Rat OrthogonalSpace::form(const Vec& u, const Vec& v) const {
  Rat s = 0;
  for (int i = -n; i <= n; ++i) {
    const Rat& a = u[col(i)];
    if (a == 0) continue;
    s += a * v[col(-i)];
  }
  return s;
}

Vec OrthogonalSpace::basis_vector(int i) const {
  Vec v(dim());
  v[col(i)] = 1;
  return v;
}

Rat SymplecticSpace::form(const Vec& u, const Vec& v) const {
  Rat s = 0;
  for (int j = -n; j <= n; ++j) {
    if (j == 0) continue;
    const Rat& b = v[col(j)];
    if (b == 0) continue;
    // beta(f_i, f_j) = j/|j| when i = -j
    s += u[col(-j)] * b * (j > 0 ? 1 : -1);
  }
  return s;
}

Vec SymplecticSpace::basis_vector(int i) const {
  Vec v(dim());
  v[col(i)] = 1;
  return v;
}

namespace {

template <typename Space>
bool isotropic_impl(const Subspace& h, const Space& sp) {
  require(h.ambient() == sp.dim(), errc::wrong_dimension, "subspace vs space dimension");
  for (int i = 0; i < h.dim(); ++i)
    for (int j = i; j < h.dim(); ++j)
      if (sp.form(h.basis_row(i), h.basis_row(j)) != 0) return false;
  return true;
}

// dim of the intersection with the span of columns [lo, hi]
int dim_in_colrange(const Subspace& s, int lo, int hi) {
  std::vector<int> outside;
  for (int c = 0; c < s.ambient(); ++c)
    if (c < lo || c > hi) outside.push_back(c);
  if (outside.empty()) return s.dim();
  return s.dim() - s.basis().columns(outside).rank();
}

}  // namespace

bool is_isotropic(const Subspace& h, const OrthogonalSpace& sp) { return isotropic_impl(h, sp); }
bool is_isotropic(const Subspace& h, const SymplecticSpace& sp) { return isotropic_impl(h, sp); }

bool in_schubert(const Subspace& h, const SignedSequence& lambda, Variant variant,
                 const OrthogonalSpace& sp) {
  require(h.ambient() == sp.dim(), errc::wrong_dimension, "subspace vs space dimension");
  require(h.dim() == sp.n, errc::wrong_dimension, "Schubert membership needs dim H = n");
  std::vector<int> lam = lambda.entries();
  for (int j = 1; j <= sp.n; ++j) {
    if (variant == Variant::primal) {
      if (dim_in_colrange(h, sp.col(lam[j - 1]), sp.col(sp.n)) < j) return false;
    } else {
      if (dim_in_colrange(h, sp.col(-sp.n), sp.col(lam[j - 1])) < sp.n + 1 - j) return false;
    }
  }
  return true;
}

bool in_schubert(const Subspace& h, const SignedSequence& lambda, Variant variant,
                 const SymplecticSpace& sp) {
  require(h.ambient() == sp.dim(), errc::wrong_dimension, "subspace vs space dimension");
  require(h.dim() == sp.n, errc::wrong_dimension, "Schubert membership needs dim H = n");
  std::vector<int> lam = lambda.entries();
  for (int j = 1; j <= sp.n; ++j) {
    if (variant == Variant::primal) {
      if (dim_in_colrange(h, sp.col(lam[j - 1]), sp.col(sp.n)) < j) return false;
    } else {
      if (dim_in_colrange(h, sp.col(-sp.n), sp.col(lam[j - 1])) < sp.n + 1 - j) return false;
    }
  }
  return true;
}

bool in_classical_schubert(const Subspace& l, const std::vector<int>& part, Variant variant,
                           int n, int k) {
  require(l.ambient() == n, errc::wrong_dimension, "L must live in V+ of dimension n");
  require(l.dim() == k, errc::wrong_dimension, "L must be a k-plane");
  auto part_at = [&](int j) { return j < static_cast<int>(part.size()) ? part[j] : 0; };
  for (int j = 1; j <= k; ++j) {
    if (variant == Variant::primal) {
      int a = k + 1 - j + part_at(j - 1);  // e_a .. e_n
      if (dim_in_colrange(l, a - 1, n - 1) < j) return false;
    } else {
      int b = j + part_at(k - j);  // e_1 .. e_b
      if (dim_in_colrange(l, 0, b - 1) < j) return false;
    }
  }
  return true;
}

std::tuple<int, std::vector<int>, std::vector<int>> sigma_tau(const SignedSequence& lambda,
                                                              const SignedSequence& mu) {
  require(bruhat_leq(mu, lambda), errc::not_comparable, "sigma_tau needs mu <= lambda");
  int k = mu.positive().length();
  std::vector<int> lam = lambda.entries(), m = mu.entries();
  std::vector<int> tau, sigma;
  for (int j = 1; j <= k; ++j) {
    tau.push_back(m[j - 1] - (k + 1 - j));
    sigma.push_back(lam[j - 1] - (k + 1 - j));
  }
  return {k, tau, sigma};
}

FormSystem::FormSystem(const SkewShape& sk) : n_(sk.n()) {
  std::vector<int> lam = sk.lambda().entries();
  for (int j : sk.fixed_points()) {
    if (j == 0) {
      linear_coords_.push_back(0);
      fixed_entries_.push_back(0);
    } else {
      linear_coords_.push_back(-lam[j - 1]);
      fixed_entries_.push_back(lam[j - 1]);
    }
  }
  for (const Component& d : sk.components()) {
    Quadric q;
    q.meets_first_column = d.meets_first_column;
    for (int c : d.col())
      if (c > 0) q.positive_cols.push_back(c);
    quadrics_.push_back(q);
  }
  // coverage partition of {0..n}: exactly one form touches each index
  std::vector<int> covered(n_ + 1, 0);
  for (size_t f = 0; f < linear_coords_.size(); ++f) covered[std::abs(linear_coords_[f])]++;
  for (const Quadric& q : quadrics_) {
    if (q.meets_first_column) covered[0]++;
    for (int c : q.positive_cols) covered[c]++;
  }
  for (int i = 0; i <= n_; ++i)
    require(covered[i] == 1, errc::identity_violated, "form index coverage is not a partition");
}

Rat FormSystem::linear_value(int which, const Vec& v, const OrthogonalSpace& sp) const {
  return v[sp.col(linear_coords_[which])];
}

Rat FormSystem::quadric_value(int which, const Vec& v, const OrthogonalSpace& sp) const {
  const Quadric& q = quadrics_[which];
  Rat s = 0;
  for (int c : q.positive_cols) s += v[sp.col(c)] * v[sp.col(-c)];
  if (q.meets_first_column) {
    s *= 2;
    s += v[sp.col(0)] * v[sp.col(0)];
  }
  return s;
}

Rat FormSystem::quadric_polar(int which, const Vec& u, const Vec& v,
                              const OrthogonalSpace& sp) const {
  const Quadric& q = quadrics_[which];
  Rat s = 0;
  for (int c : q.positive_cols) s += u[sp.col(c)] * v[sp.col(-c)] + u[sp.col(-c)] * v[sp.col(c)];
  if (q.meets_first_column) {
    s *= 2;
    s += 2 * u[sp.col(0)] * v[sp.col(0)];
  }
  return s;
}

Matrix FormSystem::quadric_matrix(int which, const OrthogonalSpace& sp) const {
  const Quadric& q = quadrics_[which];
  Matrix m(sp.dim(), sp.dim());
  Rat half(1, 2);
  for (int c : q.positive_cols) {
    Rat w = q.meets_first_column ? Rat(1) : half;
    m.at(sp.col(c), sp.col(-c)) = w;
    m.at(sp.col(-c), sp.col(c)) = w;
  }
  if (q.meets_first_column) m.at(sp.col(0), sp.col(0)) = 1;
  return m;
}

bool FormSystem::vanishes_on_vector(const Vec& v, const OrthogonalSpace& sp) const {
  for (size_t f = 0; f < linear_coords_.size(); ++f)
    if (linear_value(static_cast<int>(f), v, sp) != 0) return false;
  for (size_t d = 0; d < quadrics_.size(); ++d)
    if (quadric_value(static_cast<int>(d), v, sp) != 0) return false;
  return true;
}

bool FormSystem::ambient_form_in_ideal(const OrthogonalSpace& sp) const {
  // beta = beta_{d0} + 2 sum_{d != d0} beta_d + sum_{fixed j != 0} 2 x_{lambda_j} alpha_j
  //        (+ alpha_0^2 when 0 is fixed), as an exact matrix identity
  Matrix target(sp.dim(), sp.dim());
  target.at(sp.col(0), sp.col(0)) = 1;
  for (int i = 1; i <= sp.n; ++i) {
    target.at(sp.col(i), sp.col(-i)) = 1;
    target.at(sp.col(-i), sp.col(i)) = 1;
  }
  Matrix sum(sp.dim(), sp.dim());
  for (size_t d = 0; d < quadrics_.size(); ++d) {
    Matrix md = quadric_matrix(static_cast<int>(d), sp);
    Rat c = quadrics_[d].meets_first_column ? 1 : 2;
    for (int i = 0; i < sp.dim(); ++i)
      for (int j = 0; j < sp.dim(); ++j) sum.at(i, j) += c * md.at(i, j);
  }
  for (size_t f = 0; f < linear_coords_.size(); ++f) {
    int entry = fixed_entries_[f];
    if (entry == 0) {
      sum.at(sp.col(0), sp.col(0)) += 1;  // alpha_0^2
    } else {
      sum.at(sp.col(entry), sp.col(-entry)) += 1;  // 2 x_{lambda_j} alpha_j
      sum.at(sp.col(-entry), sp.col(entry)) += 1;
    }
  }
  return sum == target;
}

FormSystem z_forms(const SignedSequence& lambda, const SignedSequence& mu) {
  return FormSystem(SkewShape(lambda, mu));
}

bool vanishes_on(const Subspace& h, const FormSystem& fs, const OrthogonalSpace& sp) {
  for (int i = 0; i < h.dim(); ++i) {
    Vec r = h.basis_row(i);
    for (size_t f = 0; f < fs.linear_coords().size(); ++f)
      if (fs.linear_value(static_cast<int>(f), r, sp) != 0) return false;
  }
  // quadratic forms must vanish identically: all polar values zero
  for (size_t d = 0; d < fs.quadrics().size(); ++d) {
    Matrix m = fs.quadric_matrix(static_cast<int>(d), sp);
    for (int i = 0; i < h.dim(); ++i) {
      Vec mi = m * h.basis_row(i);
      for (int j = i; j < h.dim(); ++j)
        if (dot(h.basis_row(j), mi) != 0) return false;
    }
  }
  return true;
}

namespace detail {

LocalModel make_local_model(const SignedSequence& lambda, const SignedSequence& mu) {
  SkewShape sk(lambda, mu);
  require(sk.is_skew_row() && sk.delta() == 1 && sk.has_first_column_component() &&
              sk.fixed_points().empty(),
          errc::shape_not_supported,
          "local model needs a skew row with one component meeting column 1 and no fixed points");
  int k = mu.positive().length();
  if (lambda.entries()[k] == 1) return {lambda, mu, k, false};
  SignedSequence lam2 = mu.complement(), mu2 = lambda.complement();
  int k2 = mu2.positive().length();
  require(lam2.entries()[k2] == 1, errc::shape_not_supported,
          "neither the shape nor its reflection has last row of length 1");
  return {lam2, mu2, k2, true};
}

std::vector<Vec> local_rows_direct(const LocalModel& m, const std::vector<Rat>& x,
                                   const std::vector<Rat>& y) {
  const int n = m.lambda.n();
  OrthogonalSpace sp(n);
  require(static_cast<int>(x.size()) == n, errc::wrong_dimension, "x must have entries 0..n-1");
  require(static_cast<int>(y.size()) == n - 1, errc::wrong_dimension, "y must have entries 2..n");
  std::vector<int> lam = m.lambda.entries(), mu = m.mu.entries();
  std::vector<Vec> rows;
  for (int j = 1; j <= m.k; ++j) {
    Vec g(sp.dim());
    g[sp.col(lam[j - 1])] = 1;
    for (int i = mu[j - 1]; i <= lam[j - 1] - 1; ++i) g[sp.col(i)] = x[i];
    rows.push_back(g);
  }
  {
    Vec g(sp.dim());
    g[sp.col(1)] = -2 * x[0] * x[0];
    g[sp.col(0)] = 2 * x[0];
    g[sp.col(-1)] = 1;
    for (int i = mu[m.k]; i <= -2; ++i) g[sp.col(i)] = y[-i - 2];
    rows.push_back(g);
  }
  for (int j = m.k + 2; j <= n; ++j) {
    Vec g(sp.dim());
    g[sp.col(lam[j - 1])] = 1;
    for (int i = mu[j - 1]; i <= lam[j - 1] - 1; ++i) g[sp.col(i)] = y[-i - 2];
    rows.push_back(g);
  }
  return rows;
}

std::vector<Rat> solve_isotropy_direct(const LocalModel& m, const std::vector<Rat>& x) {
  const int n = m.lambda.n();
  OrthogonalSpace sp(n);
  require(static_cast<int>(x.size()) == n, errc::wrong_dimension, "x must have entries 0..n-1");
  std::vector<int> lam = m.lambda.entries(), mu = m.mu.entries();
  if (n == 1) return {};

  // bottom rows: numeric part plus unit slots for the unknown y's
  struct BottomRow {
    Vec numeric;
    std::vector<std::pair<int, int>> y_slots;  // (column, y index 0-based for y_{idx+2})
  };
  std::vector<BottomRow> bottom;
  {
    BottomRow r{Vec(sp.dim()), {}};
    r.numeric[sp.col(1)] = -2 * x[0] * x[0];
    r.numeric[sp.col(0)] = 2 * x[0];
    r.numeric[sp.col(-1)] = 1;
    for (int i = mu[m.k]; i <= -2; ++i) r.y_slots.emplace_back(sp.col(i), -i - 2);
    bottom.push_back(std::move(r));
  }
  for (int j = m.k + 2; j <= n; ++j) {
    BottomRow r{Vec(sp.dim()), {}};
    r.numeric[sp.col(lam[j - 1])] = 1;
    for (int i = mu[j - 1]; i <= lam[j - 1] - 1; ++i) r.y_slots.emplace_back(sp.col(i), -i - 2);
    bottom.push_back(std::move(r));
  }
  std::vector<Vec> top;
  for (int j = 1; j <= m.k; ++j) {
    Vec g(sp.dim());
    g[sp.col(lam[j - 1])] = 1;
    for (int i = mu[j - 1]; i <= lam[j - 1] - 1; ++i) g[sp.col(i)] = x[i];
    top.push_back(g);
  }

  auto mirror = [&](int c) { return 2 * n - c; };
  std::vector<Vec> eq_rows;  // coefficients over y_2..y_n
  std::vector<Rat> eq_rhs;
  for (const Vec& gi : top) {
    for (const BottomRow& gj : bottom) {
      Rat c = 0;
      for (int col = 0; col < sp.dim(); ++col)
        if (gi[col] != 0 && gj.numeric[mirror(col)] != 0) c += gi[col] * gj.numeric[mirror(col)];
      Vec coeffs(n - 1);
      bool any = false;
      for (auto [ycol, yidx] : gj.y_slots) {
        Rat w = gi[mirror(ycol)];
        if (w != 0) {
          coeffs[yidx] += w;
          any = true;
        }
      }
      if (!any && c == 0) continue;  // identically zero
      eq_rows.push_back(coeffs);
      eq_rhs.push_back(-c);
    }
  }
  require(static_cast<int>(eq_rows.size()) == n - 1, errc::division_by_zero,
          "expected n-1 nontrivial isotropy equations; a required x vanished");
  Matrix a = Matrix::from_rows(eq_rows);
  require(a.rank() == n - 1, errc::division_by_zero,
          "isotropy system is singular; a required x vanished");
  auto y = a.solve(eq_rhs);
  require(y.has_value(), errc::division_by_zero, "isotropy system inconsistent");
  return *y;
}

std::vector<Vec> hook_eliminate(const OrthogonalSpace& sp,
                                const std::vector<std::pair<int, int>>& rows, const Vec& v_plus,
                                const Vec& v_minus, std::map<int, Rat>& slots) {
  const int kd = static_cast<int>(rows.size());
  std::vector<Rat> c(kd);
  auto v_plus_at = [&](int i) { return v_plus[sp.col(i)]; };
  auto v_minus_at = [&](int i) { return v_minus[sp.col(i)]; };

  c[0] = v_plus_at(rows[0].first);
  require(c[0] != 0, errc::not_general, "leading coordinate of v+ vanishes");
  for (int t = 0; t < kd; ++t) {
    auto [lam, mu] = rows[t];
    // pure slots: strictly between this row's mu and lambda, except the
    // next row's leading position (which is exactly mu for t < kd-1)
    for (int i = mu + 1; i <= lam - 1; ++i) {
      require(c[t] != 0, errc::not_general, "row coefficient vanishes");
      slots[i] = v_plus_at(i) / c[t];
    }
    // lowest slot x_mu from the orthogonality equation of this row
    Rat known = v_minus_at(-lam);
    for (int i = mu + 1; i <= lam - 1; ++i) known += slots[i] * v_minus_at(-i);
    Rat pivot = v_minus_at(-mu);
    require(pivot != 0, errc::not_general, "orthogonality pivot vanishes");
    slots[mu] = -known / pivot;
    if (t + 1 < kd) {
      // rows[t+1].first == mu for consecutive skew-row component rows
      require(rows[t + 1].first == mu, errc::shape_not_supported,
              "component rows are not consecutive");
      c[t + 1] = v_plus_at(mu) - c[t] * slots[mu];
    }
  }
  std::vector<Vec> out;
  for (int t = 0; t < kd; ++t) {
    auto [lam, mu] = rows[t];
    Vec g(sp.dim());
    g[sp.col(lam)] = 1;
    for (int i = mu; i <= lam - 1; ++i) g[sp.col(i)] = slots[i];
    out.push_back(g);
  }
  // consistency: v+ in span(L) and L orthogonal to v-
  Subspace l(sp.dim(), out);
  require(l.contains(v_plus), errc::not_general, "v+ escaped the eliminated k-plane");
  for (const Vec& g : out)
    require(sp.form(g, v_minus) == 0, errc::not_general, "eliminated plane not orthogonal to v-");
  return out;
}

}  // namespace detail

Subspace local_coords(const SignedSequence& lambda, const SignedSequence& mu,
                      const std::vector<Rat>& x, const std::vector<Rat>& y) {
  detail::LocalModel m = detail::make_local_model(lambda, mu);
  std::vector<Vec> rows = detail::local_rows_direct(m, x, y);
  if (m.reflected)
    for (Vec& r : rows) r = detail::reflect_vec(r);
  return Subspace(2 * lambda.n() + 1, rows);
}

std::vector<Rat> solve_isotropy(const SignedSequence& lambda, const SignedSequence& mu,
                                const std::vector<Rat>& x) {
  detail::LocalModel m = detail::make_local_model(lambda, mu);
  return detail::solve_isotropy_direct(m, x);
}

Decomposition decompose(const Subspace& h, const SignedSequence& lambda,
                        const SignedSequence& mu) {
  const int n = lambda.n();
  OrthogonalSpace sp(n);
  require(h.dim() == n, errc::wrong_dimension, "decompose needs a maximal isotropic H");
  require(is_isotropic(h, sp) && in_schubert(h, mu, Variant::primal, sp) &&
              in_schubert(h, lambda, Variant::dual, sp),
          errc::membership_failed, "H is not in the Schubert intersection");
  SkewShape sk(lambda, mu);
  std::vector<int> lam = lambda.entries(), m = mu.entries();

  Decomposition out;
  std::vector<Vec> fixed_rows;
  std::vector<int> fixed_cols;
  for (int j : sk.fixed_points()) {
    if (j == 0) continue;
    fixed_rows.push_back(sp.basis_vector(m[j - 1]));
    fixed_cols.push_back(sp.col(m[j - 1]));
    fixed_cols.push_back(sp.col(-m[j - 1]));
  }
  out.h_fixed = h.coordinate_slice(fixed_cols);
  require(out.h_fixed == Subspace(sp.dim(), fixed_rows), errc::membership_failed,
          "H cap V_phi differs from the span of the fixed basis vectors");

  Subspace assembly = out.h_fixed;
  for (const Component& d : sk.components()) {
    if (d.meets_first_column) {
      std::vector<int> cols;
      for (int i = -d.max_col; i <= d.max_col; ++i) cols.push_back(sp.col(i));
      Subspace h0 = h.coordinate_slice(cols);
      require(h0.dim() == d.column_count(), errc::membership_failed,
              "dim H cap V_0 must be the column count of d_0");
      assembly = assembly.sum(h0);
      out.h_zero = std::move(h0);
      continue;
    }
    std::vector<int> plus_cols, minus_cols;
    for (int c : d.col()) {
      plus_cols.push_back(sp.col(c));
      minus_cols.push_back(sp.col(-c));
    }
    Subspace hp = h.coordinate_slice(plus_cols);
    Subspace hm = h.coordinate_slice(minus_cols);
    int cd = static_cast<int>(d.col().size());
    require(hp.dim() == d.row_count(), errc::membership_failed,
            "dim H cap V_d^+ must be the row count of d");
    require(hm.dim() == cd - d.row_count(), errc::membership_failed,
            "dim H cap V_d^- must be #col(d) minus the row count");
    // (H cap V_d^-)^perp inside V_d^+ equals H cap V_d^+
    std::vector<Vec> ann_rows;
    {
      Matrix constraints(hm.dim(), cd);
      for (int i = 0; i < hm.dim(); ++i) {
        Vec r = hm.basis_row(i);
        for (int j = 0; j < cd; ++j) constraints.at(i, j) = r[minus_cols[j]];
      }
      Matrix ker = constraints.right_kernel();
      for (int i = 0; i < ker.rows(); ++i) {
        Vec w(sp.dim());
        for (int j = 0; j < cd; ++j) w[plus_cols[j]] = ker.at(i, j);
        ann_rows.push_back(w);
      }
    }
    require(Subspace(sp.dim(), ann_rows) == hp, errc::membership_failed,
            "(H cap V_d^-)^perp did not reproduce H cap V_d^+");
    assembly = assembly.sum(hp).sum(hm);
    out.h_plus.push_back(std::move(hp));
    out.h_minus.push_back(std::move(hm));
  }
  require(assembly == h, errc::membership_failed, "parts did not reassemble to H");
  return out;
}

Subspace symplectic_projection(const Subspace& h, int n) {
  OrthogonalSpace v(n);
  SymplecticSpace w(n);
  require(h.ambient() == v.dim(), errc::wrong_dimension, "H must live in the orthogonal space");
  for (int i = 0; i < h.dim(); ++i)
    require(h.basis_row(i)[v.col(0)] == 0, errc::not_applicable,
            "x_0 does not vanish on H (a component meets the first column)");
  std::vector<Vec> rows;
  for (int i = 0; i < h.dim(); ++i) {
    Vec src = h.basis_row(i);
    Vec dst(w.dim());
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      dst[w.col(j)] = src[v.col(j)];
    }
    rows.push_back(dst);
  }
  Subspace image(w.dim(), rows);
  require(image.dim() == h.dim(), errc::membership_failed, "projection dropped dimensions");
  require(is_isotropic(image, w), errc::membership_failed,
          "projected subspace is not isotropic for the alternating form");
  return image;
}

Subspace read_subspace(std::istream& in, std::string& kind, int& n) {
  std::string header;
  do {
    require(static_cast<bool>(std::getline(in, header)), errc::parse_error, "missing header line");
  } while (header.find_first_not_of(" \t\r") == std::string::npos);
  std::istringstream hs(header);
  std::string ntok;
  hs >> kind >> ntok;
  require(kind == "orthogonal" || kind == "symplectic", errc::parse_error,
          "header must start with 'orthogonal' or 'symplectic'");
  require(ntok.rfind("n=", 0) == 0, errc::parse_error, "header must carry n=<int>");
  n = std::stoi(ntok.substr(2));
  require(n >= 1, errc::parse_error, "n must be positive");
  int dim = kind == "orthogonal" ? 2 * n + 1 : 2 * n;
  std::vector<Vec> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Vec row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    require(static_cast<int>(row.size()) == dim, errc::parse_error,
            "row has wrong number of entries");
    rows.push_back(row);
  }
  return Subspace(dim, rows);
}

void write_subspace(std::ostream& out, const Subspace& s, const std::string& kind, int n) {
  out << kind << " n=" << n << "\n";
  for (int i = 0; i < s.dim(); ++i) {
    Vec r = s.basis_row(i);
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) out << ' ';
      out << format_rational(r[j]);
    }
    out << "\n";
  }
}

}  // namespace isogr
