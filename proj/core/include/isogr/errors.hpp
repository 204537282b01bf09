#pragma once

#include <stdexcept>
#include <string>

namespace isogr {

// Every failure the library can report.  Codes mirror the contract of the
// operation that raises them so callers can branch without string matching.
enum class errc {
  // index combinatorics
  not_strictly_decreasing,
  abs_values_not_permutation,
  wrong_length,
  part_exceeds_n,
  mismatched_n,
  not_comparable,
  identity_violated,
  parse_error,
  // class arithmetic
  m_out_of_range,
  degree_mismatch,
  // symmetric-function oracle
  too_few_variables,
  not_in_span,
  non_integral_adjustment,
  coefficient_overflow,
  // geometry
  wrong_dimension,
  shape_not_supported,
  division_by_zero,
  degenerate_input,
  not_general,
  v_not_in_z,
  not_applicable,
  membership_failed,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace isogr
