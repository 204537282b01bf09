#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "isogr/matrix.hpp"
#include "isogr/rng.hpp"
#include "isogr/shapes.hpp"

namespace isogr {

// (2n+1)-dimensional space with basis e_{-n},...,e_0,...,e_n and symmetric
// form beta(e_i, e_j) = [i = -j].  Coordinates are stored with column
// i + n, so membership in coordinate flags is a column-range question.
struct OrthogonalSpace {
  int n;
  explicit OrthogonalSpace(int n_) : n(n_) {}
  int dim() const { return 2 * n + 1; }
  int col(int i) const { return i + n; }
  int index_of_col(int c) const { return c - n; }
  Rat form(const Vec& u, const Vec& v) const;
  Vec basis_vector(int i) const;
  // quadratic value beta(v, v) = x_0^2 + 2 sum_{i>0} x_i x_{-i}
  Rat quad(const Vec& v) const { return form(v, v); }
};

// 2n-dimensional space with basis f_{-n},..,f_{-1},f_1,..,f_n and
// alternating form beta(f_i, f_j) = j/|j| for i = -j.
struct SymplecticSpace {
  int n;
  explicit SymplecticSpace(int n_) : n(n_) {}
  int dim() const { return 2 * n; }
  int col(int i) const { return i < 0 ? i + n : i + n - 1; }
  Rat form(const Vec& u, const Vec& v) const;
  Vec basis_vector(int i) const;
};

bool is_isotropic(const Subspace& h, const OrthogonalSpace& sp);
bool is_isotropic(const Subspace& h, const SymplecticSpace& sp);

enum class Variant { primal, dual };

// Primal: H in X_lambda, i.e. dim H cap <e_{lambda_j},..,e_n> >= j for all j.
// Dual: H in X'_{lambda^c}, i.e. dim H cap <e_{-n},..,e_{lambda_j}> >= n+1-j.
bool in_schubert(const Subspace& h, const SignedSequence& lambda, Variant variant,
                 const OrthogonalSpace& sp);
bool in_schubert(const Subspace& h, const SignedSequence& lambda, Variant variant,
                 const SymplecticSpace& sp);

// Classical Grassmannian of k-planes in V+ = <e_1,..,e_n> (ambient n).
// Primal takes tau (Omega_tau); dual takes sigma and tests the displayed
// Omega'_{sigma^c} conditions dim L cap <e_1,..,e_{j+sigma_{k+1-j}}> >= j.
bool in_classical_schubert(const Subspace& l, const std::vector<int>& part, Variant variant,
                           int n, int k);

// k together with the partitions tau, sigma attached to mu <= lambda
// (tau_j = mu_j - (k+1-j), sigma_j = lambda_j - (k+1-j)).
std::tuple<int, std::vector<int>, std::vector<int>> sigma_tau(const SignedSequence& lambda,
                                                              const SignedSequence& mu);

// The linear forms alpha_j = x_{-lambda_j} (alpha_0 = x_0 when 0 is fixed)
// and quadratic forms beta_d cutting Z_{lambda/mu} out of the quadric.
class FormSystem {
 public:
  struct Quadric {
    std::vector<int> positive_cols;  // k > 0 with the pair x_k x_{-k} present
    bool meets_first_column = false; // adds x_0^2 and doubles the pairs
  };

  FormSystem(const SkewShape& sk);

  int n() const { return n_; }
  const std::vector<int>& linear_coords() const { return linear_coords_; }
  const std::vector<Quadric>& quadrics() const { return quadrics_; }

  Rat linear_value(int which, const Vec& v, const OrthogonalSpace& sp) const;
  Rat quadric_value(int which, const Vec& v, const OrthogonalSpace& sp) const;
  Rat quadric_polar(int which, const Vec& u, const Vec& v, const OrthogonalSpace& sp) const;
  // symmetric matrix M with value(v) = v^T M v
  Matrix quadric_matrix(int which, const OrthogonalSpace& sp) const;

  bool vanishes_on_vector(const Vec& v, const OrthogonalSpace& sp) const;

  // beta itself lies in the ideal of the system: check the explicit
  // cofactor identity as an exact matrix equation.
  bool ambient_form_in_ideal(const OrthogonalSpace& sp) const;

 private:
  int n_;
  std::vector<int> linear_coords_;  // e-indices -lambda_j (0 allowed)
  std::vector<int> fixed_entries_;  // the lambda_j for those forms (0 for alpha_0)
  std::vector<Quadric> quadrics_;
};

FormSystem z_forms(const SignedSequence& lambda, const SignedSequence& mu);

bool vanishes_on(const Subspace& h, const FormSystem& fs, const OrthogonalSpace& sp);

// Row span of the vectors g_1..g_n of the one-component local model (skew
// row meeting column 1, no fixed points).  x is indexed 0..n-1 and y is
// indexed 2..n.  When the shape itself does not have last row of length 1
// but its reflection does, the rows are built in reflected coordinates and
// mapped back; the parameters then refer to the reflected model.
Subspace local_coords(const SignedSequence& lambda, const SignedSequence& mu,
                      const std::vector<Rat>& x, const std::vector<Rat>& y);

// The unique y making <g_1,..,g_n> isotropic: exactly n-1 of the equations
// beta(g_i, g_j) = 0 with i <= k < j are nontrivial and they are triangular
// in the y's.  Requires the x-coordinates indexed by -mu_{k+1},..,-mu_{n-1}
// to be nonzero.  Returned vector is indexed like the y argument above.
std::vector<Rat> solve_isotropy(const SignedSequence& lambda, const SignedSequence& mu,
                                const std::vector<Rat>& x);

// All rational lines <v> in K with v in the common zero locus of fs.
// DegenerateInput signals a positive-dimensional or non-reduced or
// irrational solution set; an empty list is a valid answer.
std::vector<Subspace> lines_in_K(const Subspace& k_space, const FormSystem& fs,
                                 const OrthogonalSpace& sp);

// The unique H in X_mu cap X'_{lambda^c} through a general isotropic line
// <v> of Z_{lambda/mu}, assembled component by component.
Subspace reconstruct_from_line(const SignedSequence& lambda, const SignedSequence& mu,
                               const Vec& v);

struct Decomposition {
  Subspace h_fixed;                 // H cap V_phi
  std::optional<Subspace> h_zero;   // H cap V_0 when a component meets column 1
  std::vector<Subspace> h_plus;     // H cap V_d^+ per off-column component
  std::vector<Subspace> h_minus;    // H cap V_d^-
};

// Intersections of H with the orthogonal blocks attached to lambda/mu,
// verified against the dimension identities and reassembly; throws
// MembershipFailed when any identity fails.
Decomposition decompose(const Subspace& h, const SignedSequence& lambda,
                        const SignedSequence& mu);

// Image of H under e_i -> f_i (i != 0), e_0 -> 0; requires the coordinate
// x_0 to vanish on H (no component of the indexing shape meets column 1).
Subspace symplectic_projection(const Subspace& h, int n);

// lines_in_K followed by reconstruct_from_line for each line, with
// isotropy/membership postconditions checked.
std::vector<Subspace> triple_intersect(const SignedSequence& lambda, const SignedSequence& mu,
                                       const Subspace& k_space);

// A random point of X_mu cap X'_{lambda^c} (skew-row shapes), built from
// per-component local coordinates with small random parameters.
Subspace sample_intersection_point(const SignedSequence& lambda, const SignedSequence& mu,
                                   Rng& rng);

// A random isotropic (n+1-m)-plane K through min(2^(delta-1), n+1-m) random
// rational points of Z_{lambda/mu}, completed with random isotropic vectors
// off Z; keeps every intersection line rational for generic samples.
Subspace sample_isotropic_k(const SignedSequence& lambda, const SignedSequence& mu, Rng& rng);

struct SkewRowInstance {
  SignedSequence lambda, mu;
  int m = 0;
};

// Random skew-row pair with 2 <= n <= n_max.
SkewRowInstance random_skew_row_instance(Rng& rng, int n_max);

// Matrix file format: header "orthogonal n=4" or "symplectic n=4", then one
// row per line with exact rationals p/q.
Subspace read_subspace(std::istream& in, std::string& kind, int& n);
void write_subspace(std::ostream& out, const Subspace& s, const std::string& kind, int n);

}  // namespace isogr
