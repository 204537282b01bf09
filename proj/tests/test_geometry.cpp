#include <doctest.h>

#include <sstream>

#include "isogr/geometry.hpp"
#include "test_data.hpp"

using namespace isogr;

namespace {

SignedSequence seq(const std::string& text, int n) { return SignedSequence::parse(text, n); }

Subspace coordinate_subspace(const OrthogonalSpace& sp, const std::vector<int>& indices) {
  std::vector<Vec> rows;
  for (int i : indices) rows.push_back(sp.basis_vector(i));
  return Subspace(sp.dim(), rows);
}

Subspace load(const char* text) {
  std::istringstream in(text);
  std::string kind;
  int n = 0;
  return read_subspace(in, kind, n);
}

}  // namespace

TEST_CASE("bilinear form values") {
  OrthogonalSpace v(4);
  CHECK(v.form(v.basis_vector(1), v.basis_vector(0)) == 0);
  CHECK(v.form(v.basis_vector(0), v.basis_vector(0)) == 1);
  CHECK(v.form(v.basis_vector(2), v.basis_vector(-2)) == 1);
  SymplecticSpace w(4);
  CHECK(w.form(w.basis_vector(1), w.basis_vector(-1)) == -1);
  CHECK(w.form(w.basis_vector(-1), w.basis_vector(1)) == 1);
  CHECK(w.form(w.basis_vector(-2), w.basis_vector(1)) == 0);
}

TEST_CASE("isotropy") {
  OrthogonalSpace sp(4);
  CHECK(is_isotropic(coordinate_subspace(sp, {1, 2, 3, 4}), sp));
  CHECK_FALSE(is_isotropic(coordinate_subspace(sp, {1, -1}), sp));
  CHECK(is_isotropic(load(testdata::kWorkedK), sp));
}

TEST_CASE("schubert membership for coordinate subspaces") {
  OrthogonalSpace sp(4);
  SignedSequence lam = seq("4,2,1,-3", 4);
  Subspace h = coordinate_subspace(sp, {4, 2, 1, -3});
  CHECK(in_schubert(h, lam, Variant::primal, sp));
  CHECK(in_schubert(h, lam, Variant::dual, sp));
  // nesting along the Bruhat order
  SignedSequence mu = seq("3,2,-1,-4", 4);
  CHECK(in_schubert(h, mu, Variant::primal, sp));
  // and failure against an incomparable index
  SignedSequence bigger = seq("4,3,-1,-2", 4);
  CHECK_FALSE(in_schubert(h, bigger, Variant::primal, sp));
  CHECK_THROWS_WITH_AS(in_schubert(coordinate_subspace(sp, {1, 2}), lam, Variant::primal, sp),
                       doctest::Contains("WrongDimension"), error);
}

TEST_CASE("symplectic schubert membership") {
  SymplecticSpace sp(3);
  std::vector<Vec> rows{sp.basis_vector(3), sp.basis_vector(2), sp.basis_vector(-1)};
  Subspace h(sp.dim(), rows);
  CHECK(in_schubert(h, seq("3,2,-1", 3), Variant::primal, sp));
  CHECK(in_schubert(h, seq("3,2,-1", 3), Variant::dual, sp));
  CHECK_FALSE(in_schubert(h, seq("3,2,1", 3), Variant::primal, sp));
}

TEST_CASE("sigma and tau") {
  auto [k, tau, sigma] = sigma_tau(seq("6,5,3,1,-2,-4", 6), seq("5,3,1,-2,-4,-6", 6));
  CHECK(k == 3);
  CHECK(tau == std::vector<int>{2, 1, 0});
  CHECK(sigma == std::vector<int>{3, 3, 2});
  SignedSequence lam = seq("4,2,1,-3", 4);
  auto [k2, tau2, sigma2] = sigma_tau(lam, lam);
  CHECK(tau2 == sigma2);
  // minimal staircase gives tau = 0
  auto [k3, tau3, sigma3] = sigma_tau(seq("4,3,2,1", 4), seq("3,2,1,-4", 4));
  CHECK(tau3 == std::vector<int>{0, 0, 0});
}

TEST_CASE("classical membership") {
  const int n = 6, k = 3;
  std::vector<int> tau{2, 1, 0}, sigma{3, 3, 2};
  // echelon representatives of the top block, any parameter values
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> rows;
    std::vector<std::pair<int, int>> shape{{6, 5}, {5, 3}, {3, 1}};  // (lambda_j, mu_j)
    for (auto [lamj, muj] : shape) {
      Vec g(n);
      g[lamj - 1] = 1;
      for (int i = muj; i <= lamj - 1; ++i) g[i - 1] = rng.small_rational();
      rows.push_back(g);
    }
    Subspace l(n, rows);
    CHECK(in_classical_schubert(l, tau, Variant::primal, n, k));
    CHECK(in_classical_schubert(l, sigma, Variant::dual, n, k));
  }
  // coordinate flag representative
  std::vector<Vec> flag_rows;
  for (int a : {6, 5, 3}) {
    Vec g(n);
    g[a - 1] = 1;
    flag_rows.push_back(g);
  }
  CHECK(in_classical_schubert(Subspace(n, flag_rows), tau, Variant::primal, n, k));
  // a generic plane misses a nontrivial primal condition
  std::vector<Vec> generic;
  for (int r = 0; r < k; ++r) {
    Vec g(n);
    for (int c = 0; c < n; ++c) g[c] = rng.nonzero_rational();
    generic.push_back(g);
  }
  CHECK_FALSE(in_classical_schubert(Subspace(n, generic), tau, Variant::primal, n, k));
}

TEST_CASE("z_forms of the worked example") {
  FormSystem fs = z_forms(seq("4,2,1,-3", 4), seq("3,2,-1,-4", 4));
  OrthogonalSpace sp(4);
  REQUIRE(fs.linear_coords().size() == 1);
  CHECK(fs.linear_coords()[0] == -2);  // alpha_2 = x_{-2}
  REQUIRE(fs.quadrics().size() == 2);
  const auto& d0 = fs.quadrics()[0].meets_first_column ? fs.quadrics()[0] : fs.quadrics()[1];
  const auto& d1 = fs.quadrics()[0].meets_first_column ? fs.quadrics()[1] : fs.quadrics()[0];
  CHECK(d0.positive_cols == std::vector<int>{1});
  CHECK(d1.positive_cols == std::vector<int>{3, 4});
  // beta_0 = x_0^2 + 2 x_1 x_{-1} on e_{-1} + e_1 evaluates to 2
  Vec u = added(sp.basis_vector(1), sp.basis_vector(-1));
  int which0 = fs.quadrics()[0].meets_first_column ? 0 : 1;
  CHECK(fs.quadric_value(which0, u, sp) == 2);
  CHECK(fs.ambient_form_in_ideal(sp));
}

TEST_CASE("z_forms of the diagonal pair") {
  SignedSequence lam = seq("4,2,1,-3", 4);
  FormSystem fs = z_forms(lam, lam);
  CHECK(fs.linear_coords().size() == 5);  // alpha_j for all j plus alpha_0
  CHECK(fs.quadrics().empty());
  OrthogonalSpace sp(4);
  CHECK(vanishes_on(coordinate_subspace(sp, {4, 2, 1, -3}), fs, sp));
}

TEST_CASE("the ambient form lies in every system's ideal") {
  for (int n = 1; n <= 4; ++n) {
    OrthogonalSpace sp(n);
    auto all = all_signed_sequences(n);
    for (const SignedSequence& mu : all)
      for (const SignedSequence& lam : all) {
        if (!bruhat_leq(mu, lam)) continue;
        CHECK(z_forms(lam, mu).ambient_form_in_ideal(sp));
      }
  }
}

TEST_CASE("vanishes_on") {
  OrthogonalSpace sp(4);
  SignedSequence lam = seq("4,2,1,-3", 4), mu = seq("3,2,-1,-4", 4);
  FormSystem fs = z_forms(lam, mu);
  CHECK(vanishes_on(load(testdata::kWorkedH1), fs, sp));
  CHECK(vanishes_on(load(testdata::kWorkedH2), fs, sp));
  // full positive coordinate plane fails the negative-index linear form
  FormSystem diag = z_forms(lam, lam);
  CHECK_FALSE(vanishes_on(coordinate_subspace(sp, {1, 2, 3, 4}), diag, sp));
}

TEST_CASE("local coordinates reproduce the displayed pattern") {
  SignedSequence lam = seq("6,5,3,1,-2,-4", 6), mu = seq("5,3,1,-2,-4,-6", 6);
  OrthogonalSpace sp(6);
  std::vector<Rat> x{Rat(9), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
  std::vector<Rat> y{Rat(11), Rat(12), Rat(13), Rat(14), Rat(15)};
  Subspace h = local_coords(lam, mu, x, y);
  auto row = [&](std::vector<std::pair<int, Rat>> entries) {
    Vec g(sp.dim());
    for (auto& [i, c] : entries) g[sp.col(i)] = c;
    return g;
  };
  std::vector<Vec> want{
      row({{6, 1}, {5, x[5]}}),
      row({{5, 1}, {4, x[4]}, {3, x[3]}}),
      row({{3, 1}, {2, x[2]}, {1, x[1]}}),
      row({{1, -2 * x[0] * x[0]}, {0, 2 * x[0]}, {-1, 1}, {-2, y[0]}}),
      row({{-2, 1}, {-3, y[1]}, {-4, y[2]}}),
      row({{-4, 1}, {-5, y[3]}, {-6, y[4]}}),
  };
  CHECK(h == Subspace(sp.dim(), want));
  // all parameters zero: the coordinate subspace e_{lambda_1},..,e_{-1},..
  Subspace zero = local_coords(lam, mu, std::vector<Rat>(6), std::vector<Rat>(5));
  CHECK(zero == coordinate_subspace(sp, {6, 5, 3, -1, -2, -4}));
}

TEST_CASE("solve_isotropy reproduces the triangular formulas") {
  SignedSequence lam = seq("6,5,3,1,-2,-4", 6), mu = seq("5,3,1,-2,-4,-6", 6);
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> x(6);
    x[0] = rng.small_rational();
    x[1] = rng.small_rational();
    x[3] = rng.small_rational();
    x[5] = rng.small_rational();
    x[2] = rng.nonzero_rational();
    x[4] = rng.nonzero_rational();
    std::vector<Rat> y = solve_isotropy(lam, mu, x);
    CHECK(y[0] == -x[1] / x[2]);
    CHECK(y[1] == -x[2]);
    CHECK(y[2] == -y[1] * x[3] / x[4]);
    CHECK(y[3] == -x[4]);
    CHECK(y[4] == -x[5] * y[3]);
    OrthogonalSpace sp(6);
    Subspace h = local_coords(lam, mu, x, y);
    CHECK(is_isotropic(h, sp));
    CHECK(in_schubert(h, mu, Variant::primal, sp));
    CHECK(in_schubert(h, lam, Variant::dual, sp));
    CHECK(vanishes_on(h, z_forms(lam, mu), sp));
  }
}

TEST_CASE("solve_isotropy needs the stated x-coordinates") {
  SignedSequence lam = seq("6,5,3,1,-2,-4", 6), mu = seq("5,3,1,-2,-4,-6", 6);
  std::vector<Rat> x{Rat(1), Rat(1), Rat(0), Rat(1), Rat(1), Rat(1)};  // x_2 = 0
  CHECK_THROWS_WITH_AS(solve_isotropy(lam, mu, x), doctest::Contains("DivisionByZero"), error);
}

TEST_CASE("local model machinery over random skew rows") {
  // every local-coordinates point passes all four membership checks
  Rng rng(1234);
  int built = 0;
  for (int trial = 0; trial < 200 && built < 100; ++trial) {
    SkewRowInstance inst = random_skew_row_instance(rng, 6);
    SkewShape sk(inst.lambda, inst.mu);
    OrthogonalSpace sp(inst.lambda.n());
    Subspace h = sample_intersection_point(inst.lambda, inst.mu, rng);
    CHECK(is_isotropic(h, sp));
    CHECK(in_schubert(h, inst.mu, Variant::primal, sp));
    CHECK(in_schubert(h, inst.lambda, Variant::dual, sp));
    CHECK(vanishes_on(h, z_forms(inst.lambda, inst.mu), sp));
    ++built;
  }
  CHECK(built == 100);
}

TEST_CASE("decompose splits along the blocks") {
  OrthogonalSpace sp(4);
  SignedSequence lam = seq("4,2,1,-3", 4);
  // diagonal pair: everything is fixed
  Subspace h = coordinate_subspace(sp, {4, 2, 1, -3});
  Decomposition dec = decompose(h, lam, lam);
  CHECK(dec.h_fixed == h);
  CHECK_FALSE(dec.h_zero.has_value());
  CHECK(dec.h_plus.empty());

  // single component meeting column 1, no fixed points: H = H_0
  SignedSequence lam2 = seq("2,1", 2), mu2 = seq("1,-2", 2);
  Rng rng(7);
  Subspace h2 = sample_intersection_point(lam2, mu2, rng);
  Decomposition dec2 = decompose(h2, lam2, mu2);
  CHECK(dec2.h_fixed.dim() == 0);
  REQUIRE(dec2.h_zero.has_value());
  CHECK(*dec2.h_zero == h2);

  // worked instance: fixed line, a zero block and one off-column component
  Subspace h1 = load(testdata::kWorkedH2);
  Decomposition dec3 = decompose(h1, lam, seq("3,2,-1,-4", 4));
  CHECK(dec3.h_fixed.dim() == 1);
  REQUIRE(dec3.h_zero.has_value());
  CHECK(dec3.h_zero->dim() == 1);
  REQUIRE(dec3.h_plus.size() == 1);
  CHECK(dec3.h_plus[0].dim() == 1);
  CHECK(dec3.h_minus[0].dim() == 1);
}

TEST_CASE("symplectic projection") {
  const int n = 3;
  OrthogonalSpace v(n);
  SymplecticSpace w(n);
  // coordinate subspace maps to the coordinate subspace
  Subspace h = coordinate_subspace(v, {3, 2, -1});
  Subspace img = symplectic_projection(h, n);
  std::vector<Vec> want{w.basis_vector(3), w.basis_vector(2), w.basis_vector(-1)};
  CHECK(img == Subspace(w.dim(), want));
  CHECK(in_schubert(img, seq("3,2,-1", 3), Variant::primal, w));

  // an off-column instance: x_0 vanishes on H, the image lands in Y cap Y'
  SignedSequence lam = seq("3,1,-2", 3), mu = seq("2,1,-3", 3);
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace hh = sample_intersection_point(lam, mu, rng);
    Subspace image = symplectic_projection(hh, n);
    CHECK(is_isotropic(image, w));
    CHECK(in_schubert(image, mu, Variant::primal, w));
    CHECK(in_schubert(image, lam, Variant::dual, w));
  }

  // a subspace with an e_0-dependent row is rejected
  std::vector<Vec> rows{added(v.basis_vector(-1), scaled(v.basis_vector(0), Rat(2)))};
  CHECK_THROWS_WITH_AS(symplectic_projection(Subspace(v.dim(), rows), n),
                       doctest::Contains("NotApplicable"), error);
}

TEST_CASE("matrix file round trip") {
  Subspace k = load(testdata::kWorkedK);
  std::ostringstream os;
  write_subspace(os, k, "orthogonal", 4);
  std::istringstream is(os.str());
  std::string kind;
  int n = 0;
  Subspace back = read_subspace(is, kind, n);
  CHECK(kind == "orthogonal");
  CHECK(n == 4);
  CHECK(back == k);
  std::istringstream bad("orthogonal n=4\n1 2 3\n");
  CHECK_THROWS_AS(read_subspace(bad, kind, n), error);
}
