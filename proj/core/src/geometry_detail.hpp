#pragma once

#include "isogr/geometry.hpp"

namespace isogr::detail {

// Direct-form local model: skew row with a single component meeting the
// first column, no fixed points, and lambda_{k+1} = 1.  When the given pair
// only satisfies this after the e_j -> e_{-j} reflection, `reflected` is set
// and the model indices are (mu^c, lambda^c).
struct LocalModel {
  SignedSequence lambda, mu;
  int k = 0;
  bool reflected = false;
};

LocalModel make_local_model(const SignedSequence& lambda, const SignedSequence& mu);

inline Vec reflect_vec(const Vec& v) { return Vec(v.rbegin(), v.rend()); }

std::vector<Vec> local_rows_direct(const LocalModel& m, const std::vector<Rat>& x,
                                   const std::vector<Rat>& y);

std::vector<Rat> solve_isotropy_direct(const LocalModel& m, const std::vector<Rat>& x);

// Echelon elimination for one run of consecutive skew-row rows
// (lambda_t, mu_t), top to bottom, against the conditions v_plus in L and
// L orthogonal to v_minus.  Vectors live in the ambient orthogonal space.
// Returns the rows of L and fills `slots` with the solved x-values.
std::vector<Vec> hook_eliminate(const OrthogonalSpace& sp,
                                const std::vector<std::pair<int, int>>& rows, const Vec& v_plus,
                                const Vec& v_minus, std::map<int, Rat>& slots);

}  // namespace isogr::detail
