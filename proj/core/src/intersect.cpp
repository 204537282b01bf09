#include <algorithm>
#include <map>
#include <optional>

#include "geometry_detail.hpp"
#include "isogr/polysolve.hpp"
#include "isogr/ring.hpp"

namespace isogr {

namespace {

using detail::hook_eliminate;
using detail::LocalModel;
using detail::make_local_model;
using detail::reflect_vec;

Matrix ambient_gram(const OrthogonalSpace& sp) {
  Matrix m(sp.dim(), sp.dim());
  m.at(sp.col(0), sp.col(0)) = 1;
  for (int i = 1; i <= sp.n; ++i) {
    m.at(sp.col(i), sp.col(-i)) = 1;
    m.at(sp.col(-i), sp.col(i)) = 1;
  }
  return m;
}

Vec normalized_projective(const Vec& t) {
  for (const Rat& c : t)
    if (c != 0) return scaled(t, 1 / c);
  return t;
}

// Solutions of { t^T S_d t = 0 } in P^(rp-1), rational points only.
std::vector<Vec> solve_reduced_quadrics(const std::vector<Matrix>& quads, int rp) {
  auto value = [&](const Matrix& s, const Vec& t) {
    Rat v = 0;
    for (int i = 0; i < rp; ++i) {
      if (t[i] == 0) continue;
      for (int j = 0; j < rp; ++j) v += t[i] * s.at(i, j) * t[j];
    }
    return v;
  };
  auto satisfies_all = [&](const Vec& t) {
    for (const Matrix& s : quads)
      if (value(s, t) != 0) return false;
    return true;
  };
  auto is_zero_matrix = [&](const Matrix& s) {
    for (int i = 0; i < rp; ++i)
      for (int j = 0; j < rp; ++j)
        if (s.at(i, j) != 0) return false;
    return true;
  };

  std::vector<Vec> found;
  auto push = [&](const Vec& t) {
    bool nonzero = false;
    for (const Rat& c : t)
      if (c != 0) nonzero = true;
    if (!nonzero || !satisfies_all(t)) return;
    Vec norm = normalized_projective(t);
    if (std::find(found.begin(), found.end(), norm) == found.end()) found.push_back(norm);
  };

  if (rp == 0) return {};
  if (rp == 1) {
    push(Vec{Rat(1)});
    return found;
  }
  if (rp == 2) {
    const Matrix* s = nullptr;
    for (const Matrix& q : quads)
      if (!is_zero_matrix(q)) { s = &q; break; }
    if (!s) fail(errc::degenerate_input, "all quadrics vanish on the reduced pencil");
    BiForm f{s->at(0, 0), 2 * s->at(0, 1), s->at(1, 1)};
    ProjectiveRoots roots = binary_form_roots(f);
    if (roots.identically_zero) fail(errc::degenerate_input, "binary quadric degenerated");
    if (roots.repeated) fail(errc::degenerate_input, "binary quadric has a repeated root");
    if (!roots.all_rational)
      fail(errc::degenerate_input, "intersection lines are not rational; resample K");
    for (auto& [a, b] : roots.points) push(Vec{a, b});
    return found;
  }
  if (rp != 3) fail(errc::degenerate_input, "too many free parameters in the line system");

  // rp == 3: a pencil of conics.  Work in randomized coordinates so that
  // projections separate the solution points and both chosen conics keep a
  // t3^2 term.
  Rng coords(0x5eedc0de);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Matrix g(3, 3);
    if (attempt == 0) {
      g = Matrix::identity(3);
    } else {
      do {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) g.at(i, j) = Rat(coords.uniform(-4, 4));
      } while (g.rank() != 3);
    }
    std::vector<Matrix> s;
    for (const Matrix& q : quads) s.push_back(g.transposed() * q * g);

    // two independent conics
    int first = -1, second = -1;
    for (size_t d = 0; d < s.size() && second < 0; ++d) {
      if (is_zero_matrix(s[d])) continue;
      if (first < 0) {
        first = static_cast<int>(d);
        continue;
      }
      // independence of flattened coefficient vectors
      Matrix flat(2, 6);
      int idx[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
      for (int c = 0; c < 6; ++c) {
        flat.at(0, c) = s[first].at(idx[c][0], idx[c][1]);
        flat.at(1, c) = s[d].at(idx[c][0], idx[c][1]);
      }
      if (flat.rank() == 2) second = static_cast<int>(d);
    }
    if (first < 0) fail(errc::degenerate_input, "all quadrics vanish on the reduced pencil");
    if (second < 0) fail(errc::degenerate_input, "conic system has rank one");
    const Matrix &s1 = s[first], &s2 = s[second];
    if (s1.at(2, 2) == 0 || s2.at(2, 2) == 0) continue;  // want proper quadratics in t3

    auto b_form = [&](const Matrix& q) { return BiForm{2 * q.at(0, 2), 2 * q.at(1, 2)}; };
    auto c_form = [&](const Matrix& q) {
      return BiForm{q.at(0, 0), 2 * q.at(0, 1), q.at(1, 1)};
    };
    BiForm res = conic_resultant(s1.at(2, 2), b_form(s1), c_form(s1), s2.at(2, 2), b_form(s2),
                                 c_form(s2));
    if (biform_is_zero(res)) continue;  // shared component in these coordinates
    ProjectiveRoots proj = binary_form_roots(res);
    if (!proj.all_rational)
      fail(errc::degenerate_input, "intersection lines are not rational; resample K");
    if (proj.repeated) continue;  // retry with fresh coordinates

    std::vector<Vec> cands;
    cands.push_back(Vec{0, 0, 1});
    for (auto& [a, b] : proj.points) {
      // common t3 roots of both conics at (t1, t2) = (a, b)
      auto uni = [&](const Matrix& q) {
        UniPoly p(3);
        p[2] = q.at(2, 2);
        p[1] = 2 * (q.at(0, 2) * a + q.at(1, 2) * b);
        p[0] = q.at(0, 0) * a * a + 2 * q.at(0, 1) * a * b + q.at(1, 1) * b * b;
        return p;
      };
      UniPoly g1 = poly_gcd(uni(s1), uni(s2));
      int dg = degree(g1);
      if (dg == 1) {
        cands.push_back(Vec{a, b, -g1[0] / g1[1]});
      } else if (dg == 2) {
        RootReport rr = rational_roots(g1);
        if (!rr.split_over_q())
          fail(errc::degenerate_input, "intersection lines are not rational; resample K");
        for (const Rat& r : rr.roots) cands.push_back(Vec{a, b, r});
      } else if (dg < 0) {
        fail(errc::degenerate_input, "positive-dimensional solution set");
      }
      // dg == 0: resultant root with no common finite t3; drop it
    }
    std::vector<Vec> verified;
    for (Vec& cand : cands) {
      Vec back = g * cand;  // undo the coordinate change
      bool nonzero = false;
      for (const Rat& c : back)
        if (c != 0) nonzero = true;
      if (!nonzero || !satisfies_all(back)) continue;
      Vec norm = normalized_projective(back);
      if (std::find(verified.begin(), verified.end(), norm) == verified.end())
        verified.push_back(norm);
    }
    return verified;
  }
  fail(errc::degenerate_input, "conic elimination kept degenerating; resample K");
}

}  // namespace

std::vector<Subspace> lines_in_K(const Subspace& k_space, const FormSystem& fs,
                                 const OrthogonalSpace& sp) {
  require(k_space.ambient() == sp.dim(), errc::wrong_dimension, "K vs space dimension");
  require(is_isotropic(k_space, sp), errc::degenerate_input, "K must be isotropic");
  const int r = k_space.dim();
  if (r == 0) return {};
  const Matrix& b = k_space.basis();

  // impose the linear forms on the parameters
  const auto& lin = fs.linear_coords();
  Matrix reduced = b;
  if (!lin.empty()) {
    Matrix constraints(static_cast<int>(lin.size()), r);
    for (size_t f = 0; f < lin.size(); ++f)
      for (int i = 0; i < r; ++i) constraints.at(static_cast<int>(f), i) = b.at(i, sp.col(lin[f]));
    Matrix combos = constraints.right_kernel();
    reduced = combos * b;
  }
  const int rp = reduced.rows();
  if (rp == 0) return {};

  std::vector<Matrix> quads;
  for (size_t d = 0; d < fs.quadrics().size(); ++d) {
    Matrix m = fs.quadric_matrix(static_cast<int>(d), sp);
    quads.push_back(reduced * m * reduced.transposed());
  }
  std::vector<Vec> params = solve_reduced_quadrics(quads, rp);
  std::vector<Subspace> lines;
  for (const Vec& t : params) {
    Vec v = row_times(t, reduced);
    Subspace line(sp.dim(), {v});
    if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(line);
  }
  return lines;
}

namespace {

// Reconstruction inside the local model attached to the component meeting
// the first column; returns basis rows in the local 2l+1 coordinates.
std::vector<Vec> reconstruct_local(const SignedSequence& lam0, const SignedSequence& mu0,
                                   Vec v) {
  LocalModel m = make_local_model(lam0, mu0);
  if (m.reflected) v = reflect_vec(v);
  const int l = lam0.n();
  OrthogonalSpace sp(l);

  Rat lead = v[sp.col(-1)];
  require(lead != 0, errc::not_general, "e_{-1}-coordinate of v vanishes");
  v = scaled(v, 1 / lead);
  Rat z = v[sp.col(0)] / 2;

  Vec v_minus(sp.dim()), v_plus(sp.dim());
  for (int i = 1; i <= l; ++i) {
    v_minus[sp.col(-i)] = v[sp.col(-i)];
    v_plus[sp.col(i)] = v[sp.col(i)];
  }
  Vec v_prime = v_plus;
  v_prime[sp.col(1)] += 2 * z * z;

  std::map<int, Rat> slots;
  if (m.k > 0) {
    std::vector<int> lam = m.lambda.entries(), mu = m.mu.entries();
    std::vector<std::pair<int, int>> rows;
    for (int j = 1; j <= m.k; ++j) rows.emplace_back(lam[j - 1], mu[j - 1]);
    hook_eliminate(sp, rows, v_prime, v_minus, slots);
  }
  std::vector<Rat> x(l);
  x[0] = z;
  for (int i = 1; i <= l - 1; ++i) {
    auto it = slots.find(i);
    require(it != slots.end(), errc::not_general, "local elimination left a free coordinate");
    x[i] = it->second;
  }
  std::vector<Rat> y = detail::solve_isotropy_direct(m, x);
  std::vector<Vec> rows = detail::local_rows_direct(m, x, y);
  Subspace h0(sp.dim(), rows);
  require(h0.contains(v), errc::not_general, "local reconstruction misses v");
  if (m.reflected)
    for (Vec& r : rows) r = reflect_vec(r);
  return rows;
}

// Extract the SY_l pair carried by the l consecutive rows starting at the
// first row of the component meeting column 1.
std::pair<SignedSequence, SignedSequence> zero_component_model(const SkewShape& sk,
                                                               const Component& d) {
  const int l = d.max_col;
  const int j0 = d.first_row;
  require(j0 + l - 1 <= sk.n(), errc::identity_violated, "zero-component rows run past n");
  std::vector<int> lam = sk.lambda().entries(), mu = sk.mu().entries();
  auto slice_to_seq = [&](const std::vector<int>& e) {
    std::vector<int> pos;
    std::vector<bool> seen(l + 1, false);
    for (int j = j0; j <= j0 + l - 1; ++j) {
      int val = e[j - 1];
      int a = std::abs(val);
      require(a >= 1 && a <= l && !seen[a], errc::identity_violated,
              "zero-component rows do not form an SY_l element");
      seen[a] = true;
      if (val > 0) pos.push_back(val);
    }
    return SignedSequence(l, StrictPartition(pos));
  };
  return {slice_to_seq(lam), slice_to_seq(mu)};
}

}  // namespace

Subspace reconstruct_from_line(const SignedSequence& lambda, const SignedSequence& mu,
                               const Vec& v) {
  const int n = lambda.n();
  OrthogonalSpace sp(n);
  require(static_cast<int>(v.size()) == sp.dim(), errc::wrong_dimension, "v vs space dimension");
  SkewShape sk(lambda, mu);
  require(sk.is_skew_row(), errc::shape_not_supported, "reconstruction needs a skew row");
  FormSystem fs(sk);
  require(fs.vanishes_on_vector(v, sp), errc::v_not_in_z, "v is not in Z_{lambda/mu}");

  std::vector<int> lam = lambda.entries(), m = mu.entries();
  std::vector<Vec> rows_h;
  for (int j : sk.fixed_points()) {
    if (j == 0) continue;
    require(v[sp.col(m[j - 1])] != 0, errc::not_general, "fixed coordinate of v vanishes");
    rows_h.push_back(sp.basis_vector(m[j - 1]));
  }
  for (const Component& d : sk.components()) {
    if (d.meets_first_column) {
      const int l = d.max_col;
      auto [lam0, mu0] = zero_component_model(sk, d);
      OrthogonalSpace local(l);
      Vec v0(local.dim());
      bool any = false;
      for (int i = -l; i <= l; ++i) {
        v0[local.col(i)] = v[sp.col(i)];
        if (v0[local.col(i)] != 0) any = true;
      }
      require(any, errc::not_general, "v projects to zero in V_0");
      for (Vec local_row : reconstruct_local(lam0, mu0, v0)) {
        Vec row(sp.dim());
        for (int i = -l; i <= l; ++i) row[sp.col(i)] = local_row[local.col(i)];
        rows_h.push_back(row);
      }
    } else {
      std::vector<std::pair<int, int>> row_pairs;
      for (int j = d.first_row; j <= d.last_row; ++j) row_pairs.emplace_back(lam[j - 1], m[j - 1]);
      std::vector<int> cols = d.col();
      Vec v_plus(sp.dim()), v_minus(sp.dim());
      for (int c : cols) {
        v_plus[sp.col(c)] = v[sp.col(c)];
        v_minus[sp.col(-c)] = v[sp.col(-c)];
      }
      std::map<int, Rat> slots;
      std::vector<Vec> l_rows = hook_eliminate(sp, row_pairs, v_plus, v_minus, slots);
      // H_d^- is the annihilator of L inside V_d^-
      const int cd = static_cast<int>(cols.size());
      Matrix constraints(static_cast<int>(l_rows.size()), cd);
      for (size_t t = 0; t < l_rows.size(); ++t)
        for (int j = 0; j < cd; ++j) constraints.at(static_cast<int>(t), j) = l_rows[t][sp.col(cols[j])];
      Matrix ker = constraints.right_kernel();
      std::vector<Vec> part = l_rows;
      for (int i = 0; i < ker.rows(); ++i) {
        Vec w(sp.dim());
        for (int j = 0; j < cd; ++j) w[sp.col(-cols[j])] = ker.at(i, j);
        part.push_back(w);
      }
      Subspace hd(sp.dim(), part);
      require(hd.contains(added(v_plus, v_minus)), errc::not_general,
              "component reconstruction misses the projection of v");
      for (Vec& r : part) rows_h.push_back(std::move(r));
    }
  }
  Subspace h(sp.dim(), rows_h);
  require(h.dim() == n, errc::not_general, "assembled H has the wrong dimension");
  require(is_isotropic(h, sp), errc::not_general, "assembled H is not isotropic");
  require(in_schubert(h, mu, Variant::primal, sp) && in_schubert(h, lambda, Variant::dual, sp),
          errc::membership_failed, "assembled H escaped the Schubert intersection");
  require(h.contains(v), errc::not_general, "assembled H does not contain v");
  return h;
}

std::vector<Subspace> triple_intersect(const SignedSequence& lambda, const SignedSequence& mu,
                                       const Subspace& k_space) {
  const int n = lambda.n();
  OrthogonalSpace sp(n);
  require(bruhat_leq(mu, lambda), errc::not_comparable, "triple_intersect needs mu <= lambda");
  const int m = lambda.codim() - mu.codim();
  require(m >= 1 && m <= n, errc::m_out_of_range, "codim difference must lie in 1..n");
  require(k_space.dim() == n + 1 - m, errc::wrong_dimension, "K must have dimension n+1-m");
  FormSystem fs = z_forms(lambda, mu);
  std::vector<Subspace> out;
  for (const Subspace& line : lines_in_K(k_space, fs, sp)) {
    Subspace h = reconstruct_from_line(lambda, mu, line.basis_row(0));
    require(h.intersection_dim(k_space) >= 1, errc::membership_failed, "H misses K");
    out.push_back(h);
  }
  return out;
}

Subspace sample_intersection_point(const SignedSequence& lambda, const SignedSequence& mu,
                                   Rng& rng) {
  const int n = lambda.n();
  OrthogonalSpace sp(n);
  SkewShape sk(lambda, mu);
  require(sk.is_skew_row(), errc::shape_not_supported, "sampling needs a skew row");
  std::vector<int> lam = lambda.entries(), m = mu.entries();
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      std::vector<Vec> rows_h;
      for (int j : sk.fixed_points()) {
        if (j == 0) continue;
        rows_h.push_back(sp.basis_vector(m[j - 1]));
      }
      for (const Component& d : sk.components()) {
        if (d.meets_first_column) {
          const int l = d.max_col;
          auto [lam0, mu0] = zero_component_model(sk, d);
          LocalModel model = make_local_model(lam0, mu0);
          std::vector<Rat> x(l);
          x[0] = rng.small_rational(5);
          for (int i = 1; i <= l - 1; ++i) x[i] = rng.nonzero_rational(5);
          std::vector<Rat> y = detail::solve_isotropy_direct(model, x);
          std::vector<Vec> local_rows = detail::local_rows_direct(model, x, y);
          if (model.reflected)
            for (Vec& r : local_rows) r = reflect_vec(r);
          OrthogonalSpace local(l);
          for (const Vec& local_row : local_rows) {
            Vec row(sp.dim());
            for (int i = -l; i <= l; ++i) row[sp.col(i)] = local_row[local.col(i)];
            rows_h.push_back(row);
          }
        } else {
          std::vector<Vec> l_rows;
          for (int j = d.first_row; j <= d.last_row; ++j) {
            Vec g(sp.dim());
            g[sp.col(lam[j - 1])] = 1;
            for (int i = m[j - 1]; i <= lam[j - 1] - 1; ++i) g[sp.col(i)] = rng.nonzero_rational(5);
            l_rows.push_back(g);
          }
          std::vector<int> cols = d.col();
          const int cd = static_cast<int>(cols.size());
          Matrix constraints(static_cast<int>(l_rows.size()), cd);
          for (size_t t = 0; t < l_rows.size(); ++t)
            for (int j = 0; j < cd; ++j)
              constraints.at(static_cast<int>(t), j) = l_rows[t][sp.col(cols[j])];
          Matrix ker = constraints.right_kernel();
          for (const Vec& g : l_rows) rows_h.push_back(g);
          for (int i = 0; i < ker.rows(); ++i) {
            Vec w(sp.dim());
            for (int j = 0; j < cd; ++j) w[sp.col(-cols[j])] = ker.at(i, j);
            rows_h.push_back(w);
          }
        }
      }
      Subspace h(sp.dim(), rows_h);
      require(h.dim() == n, errc::not_general, "sample has wrong dimension");
      require(is_isotropic(h, sp), errc::not_general, "sample is not isotropic");
      require(in_schubert(h, mu, Variant::primal, sp) &&
                  in_schubert(h, lambda, Variant::dual, sp),
              errc::not_general, "sample escaped the Schubert intersection");
      return h;
    } catch (const error&) {
      continue;
    }
  }
  fail(errc::degenerate_input, "could not sample an intersection point");
}

Subspace sample_isotropic_k(const SignedSequence& lambda, const SignedSequence& mu, Rng& rng) {
  const int n = lambda.n();
  OrthogonalSpace sp(n);
  SkewShape sk(lambda, mu);
  require(sk.is_skew_row(), errc::shape_not_supported, "sampling needs a skew row");
  FormSystem fs(sk);
  const int m = sk.box_count();
  const int dim_k = n + 1 - m;
  const int delta = sk.delta();
  // Every intersection line lies in K cap {alpha = 0}, which has dimension
  // delta for a K in general position, so at most delta independent points
  // can be planted; the remaining lines come out rational anyway because
  // the eliminant already has that many rational roots (delta <= 3 here).
  const int planted_target = std::min(1 << (delta - 1), delta);
  Matrix gram = ambient_gram(sp);

  auto random_point_in = [&](const Subspace& space, const std::vector<Vec>& orthogonal_to)
      -> std::optional<Vec> {
    Matrix basis = space.basis();
    Matrix usable = basis;
    if (!orthogonal_to.empty()) {
      Matrix constraints(static_cast<int>(orthogonal_to.size()), basis.rows());
      for (size_t t = 0; t < orthogonal_to.size(); ++t)
        for (int r = 0; r < basis.rows(); ++r)
          constraints.at(static_cast<int>(t), r) = sp.form(orthogonal_to[t], basis.row(r));
      Matrix ker = constraints.right_kernel();
      if (ker.rows() == 0) return std::nullopt;
      usable = ker * basis;
    }
    for (int tries = 0; tries < 16; ++tries) {
      Vec v(sp.dim());
      for (int r = 0; r < usable.rows(); ++r) {
        Rat c = rng.small_rational(5);
        if (c == 0) continue;
        v = added(v, scaled(usable.row(r), c));
      }
      bool nonzero = false;
      for (const Rat& c : v)
        if (c != 0) nonzero = true;
      if (nonzero) return v;
    }
    return std::nullopt;
  };

  // Planted points should be in general position: every coordinate in a
  // component or fixed support nonzero, and no accidental per-component
  // orthogonality between two planted points (that collapses the quadric
  // pencil on K).
  auto coords_generic = [&](const Vec& v) {
    for (int j : sk.fixed_points()) {
      if (j == 0) continue;
      if (v[sp.col(mu.entries()[j - 1])] == 0) return false;
    }
    for (const Component& d : sk.components())
      for (int c : d.col()) {
        if (c == 0) continue;
        if (v[sp.col(c)] == 0 || v[sp.col(-c)] == 0) return false;
      }
    return true;
  };
  auto polars_generic = [&](const Vec& v, const std::vector<Vec>& planted) {
    for (const Vec& w : planted)
      for (size_t d = 0; d < fs.quadrics().size(); ++d)
        if (fs.quadric_polar(static_cast<int>(d), v, w, sp) == 0) return false;
    return true;
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      std::vector<Vec> rows;
      for (int i = 0; i < planted_target; ++i) {
        bool placed = false;
        for (int h_attempt = 0; h_attempt < 8 && !placed; ++h_attempt) {
          Subspace h = sample_intersection_point(lambda, mu, rng);
          for (int v_attempt = 0; v_attempt < 12 && !placed; ++v_attempt) {
            auto v = random_point_in(h, rows);
            if (!v || !coords_generic(*v) || !polars_generic(*v, rows)) continue;
            std::vector<Vec> extended = rows;
            extended.push_back(*v);
            if (Subspace(sp.dim(), extended).dim() != static_cast<int>(rows.size()) + 1)
              continue;
            rows.push_back(*v);
            placed = true;
          }
        }
        require(placed, errc::not_general, "could not plant a generic point");
      }
      while (static_cast<int>(rows.size()) < dim_k) {
        Subspace k_cur(sp.dim(), rows);
        Matrix u_basis = (k_cur.basis() * gram).right_kernel();
        Subspace u_space = Subspace::span_of(u_basis);
        // base point on the quadric inside U but off K: a fresh planted point
        Subspace h = sample_intersection_point(lambda, mu, rng);
        auto p = random_point_in(h, rows);
        require(p.has_value() && !k_cur.contains(*p), errc::not_general,
                "no usable base point for completion");
        bool added_row = false;
        for (int tries = 0; tries < 24 && !added_row; ++tries) {
          auto u = random_point_in(u_space, {});
          if (!u) break;
          Rat qu = sp.form(*u, *u);
          Vec w;
          if (qu == 0) {
            w = *u;
          } else {
            Rat tstar = -2 * sp.form(*p, *u) / qu;
            if (tstar == 0) continue;
            w = added(*p, scaled(*u, tstar));
          }
          if (fs.vanishes_on_vector(w, sp)) continue;  // completions must leave Z
          std::vector<Vec> extended = rows;
          extended.push_back(w);
          Subspace grown(sp.dim(), extended);
          if (grown.dim() != static_cast<int>(rows.size()) + 1) continue;
          rows.push_back(w);
          added_row = true;
        }
        require(added_row, errc::not_general, "could not extend K isotropically");
      }
      Subspace k_space(sp.dim(), rows);
      require(k_space.dim() == dim_k, errc::not_general, "K has wrong dimension");
      require(is_isotropic(k_space, sp), errc::not_general, "K is not isotropic");
      // the linear forms must stay independent on K, as for a general K
      if (!fs.linear_coords().empty()) {
        Matrix alpha(static_cast<int>(fs.linear_coords().size()), dim_k);
        for (size_t f = 0; f < fs.linear_coords().size(); ++f)
          for (int i = 0; i < dim_k; ++i)
            alpha.at(static_cast<int>(f), i) = k_space.basis().at(i, sp.col(fs.linear_coords()[f]));
        require(alpha.rank() == static_cast<int>(fs.linear_coords().size()), errc::not_general,
                "linear forms degenerated on K");
      }
      return k_space;
    } catch (const error&) {
      continue;
    }
  }
  fail(errc::degenerate_input, "could not sample an isotropic K through Z");
}

SkewRowInstance random_skew_row_instance(Rng& rng, int n_max) {
  require(n_max >= 2, errc::m_out_of_range, "need n_max >= 2");
  for (;;) {
    int n = static_cast<int>(rng.uniform(2, n_max));
    std::vector<int> pos;
    for (int a = n; a >= 1; --a)
      if (rng.uniform(0, 1) == 1) pos.push_back(a);
    SignedSequence mu(n, StrictPartition(pos));
    int m = static_cast<int>(rng.uniform(1, n));
    if (mu.codim() + m > n * (n + 1) / 2) continue;
    ClassVector expansion = pieri(Family::B, mu, m);
    if (expansion.empty()) continue;
    std::vector<StrictPartition> keys, multi;
    for (const auto& [p, c] : expansion.terms()) {
      keys.push_back(p);
      if (c > 1) multi.push_back(p);
    }
    // lean on shapes with several components half the time, so the
    // power-of-two multiplicities actually get exercised
    const std::vector<StrictPartition>& pool =
        (!multi.empty() && rng.uniform(0, 1) == 1) ? multi : keys;
    const StrictPartition& pick = pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)];
    return {SignedSequence::from_partition(pick, n), mu, m};
  }
}

}  // namespace isogr
