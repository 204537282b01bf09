#include "isogr/shapes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace isogr {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_strictly_decreasing: return "NotStrictlyDecreasing";
    case errc::abs_values_not_permutation: return "AbsValuesNotPermutation";
    case errc::wrong_length: return "WrongLength";
    case errc::part_exceeds_n: return "PartExceedsN";
    case errc::mismatched_n: return "MismatchedN";
    case errc::not_comparable: return "NotComparable";
    case errc::identity_violated: return "IdentityViolated";
    case errc::parse_error: return "ParseError";
    case errc::m_out_of_range: return "MOutOfRange";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::too_few_variables: return "TooFewVariables";
    case errc::not_in_span: return "NotInSpan";
    case errc::non_integral_adjustment: return "NonIntegralAdjustment";
    case errc::coefficient_overflow: return "CoefficientOverflow";
    case errc::wrong_dimension: return "WrongDimension";
    case errc::shape_not_supported: return "ShapeNotSupported";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::not_general: return "NotGeneral";
    case errc::v_not_in_z: return "VNotInZ";
    case errc::not_applicable: return "NotApplicable";
    case errc::membership_failed: return "MembershipFailed";
  }
  return "UnknownError";
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) fail(errc::parse_error, "empty token in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad integer '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, errc::not_strictly_decreasing, "parts must be positive");
    if (i > 0)
      require(parts_[i - 1] > parts_[i], errc::not_strictly_decreasing,
              "parts must strictly decrease");
  }
}

StrictPartition StrictPartition::parse(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) return StrictPartition{};
  return StrictPartition(parse_int_list(text));
}

int StrictPartition::weight() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string StrictPartition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

SignedSequence::SignedSequence(int n, StrictPartition positive)
    : n_(n), positive_(std::move(positive)) {
  require(n_ >= 1, errc::wrong_length, "n must be positive");
  for (int p : positive_.parts())
    require(p <= n_, errc::part_exceeds_n,
            "part " + std::to_string(p) + " exceeds n=" + std::to_string(n_));
}

SignedSequence SignedSequence::parse(const std::string& text, int n) {
  std::vector<int> vals =
      text.find_first_not_of(" \t") == std::string::npos ? std::vector<int>{} : parse_int_list(text);
  require(static_cast<int>(vals.size()) == n, errc::wrong_length,
          "expected " + std::to_string(n) + " entries, got " + std::to_string(vals.size()));
  std::vector<bool> seen(n + 1, false);
  for (size_t i = 0; i < vals.size(); ++i) {
    int a = std::abs(vals[i]);
    require(a >= 1 && a <= n && !seen[a], errc::abs_values_not_permutation,
            "absolute values must be exactly 1.." + std::to_string(n));
    seen[a] = true;
    if (i > 0)
      require(vals[i - 1] > vals[i], errc::not_strictly_decreasing,
              "entries must strictly decrease");
  }
  std::vector<int> pos;
  for (int v : vals)
    if (v > 0) pos.push_back(v);
  return SignedSequence(n, StrictPartition(pos));
}

SignedSequence SignedSequence::from_partition(const StrictPartition& p, int n) {
  return SignedSequence(n, p);
}

std::vector<int> SignedSequence::entries() const {
  std::vector<int> out = positive_.parts();
  std::vector<bool> used(n_ + 1, false);
  for (int p : out) used[p] = true;
  for (int a = 1; a <= n_; ++a)
    if (!used[a]) out.push_back(-a);
  return out;
}

int SignedSequence::entry(int j) const {
  return entries()[j - 1];
}

SignedSequence SignedSequence::complement() const {
  std::vector<int> pos;
  std::vector<bool> used(n_ + 1, false);
  for (int p : positive_.parts()) used[p] = true;
  for (int a = n_; a >= 1; --a)
    if (!used[a]) pos.push_back(a);
  return SignedSequence(n_, StrictPartition(pos));
}

std::string SignedSequence::to_string() const {
  std::vector<int> es = entries();
  std::string s;
  for (size_t i = 0; i < es.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(es[i]);
  }
  return s;
}

bool bruhat_leq(const SignedSequence& mu, const SignedSequence& lambda) {
  require(mu.n() == lambda.n(), errc::mismatched_n, "bruhat_leq needs equal n");
  std::vector<int> m = mu.entries(), l = lambda.entries();
  for (int j = 0; j < mu.n(); ++j)
    if (m[j] > l[j]) return false;
  return true;
}

std::vector<int> Component::col() const {
  std::vector<int> out;
  out.push_back(meets_first_column ? 0 : min_col - 1);
  for (int c = min_col; c <= max_col; ++c) out.push_back(c);
  return out;
}

SkewShape::SkewShape(const SignedSequence& lambda, const SignedSequence& mu)
    : lambda_(lambda), mu_(mu) {
  require(bruhat_leq(mu, lambda), errc::not_comparable,
          "mu=" + mu.to_string() + " is not <= lambda=" + lambda.to_string());
  const int n = lambda.n();
  std::vector<int> lam = lambda.entries(), m = mu.entries();

  auto clamp0 = [](int v) { return v > 0 ? v : 0; };
  for (int j = 1; j <= n; ++j)
    for (int c = clamp0(m[j - 1]) + 1; c <= clamp0(lam[j - 1]); ++c)
      boxes_.push_back({j, c});
  std::sort(boxes_.begin(), boxes_.end());

  // components by shared edge or vertex, on the left-justified array
  const int nb = static_cast<int>(boxes_.size());
  std::vector<int> comp(nb, -1);
  int ncomp = 0;
  for (int i = 0; i < nb; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int j = 0; j < nb; ++j) {
        if (comp[j] >= 0) continue;
        if (std::abs(boxes_[cur].row - boxes_[j].row) <= 1 &&
            std::abs(boxes_[cur].col - boxes_[j].col) <= 1) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  components_.resize(ncomp);
  for (int i = 0; i < nb; ++i) components_[comp[i]].boxes.push_back(boxes_[i]);
  for (Component& d : components_) {
    d.min_col = d.max_col = d.boxes[0].col;
    d.first_row = d.last_row = d.boxes[0].row;
    std::set<int> cols;
    for (const Box& b : d.boxes) {
      d.min_col = std::min(d.min_col, b.col);
      d.max_col = std::max(d.max_col, b.col);
      d.first_row = std::min(d.first_row, b.row);
      d.last_row = std::max(d.last_row, b.row);
      cols.insert(b.col);
    }
    d.meets_first_column = (d.min_col == 1);
    // a component's columns form an interval; anything else is a bug
    require(static_cast<int>(cols.size()) == d.max_col - d.min_col + 1,
            errc::identity_violated, "component columns not an interval");
  }
  std::sort(components_.begin(), components_.end(),
            [](const Component& a, const Component& b) { return a.boxes[0] < b.boxes[0]; });

  for (int j = 1; j <= n; ++j)
    if (lam[j - 1] == m[j - 1]) fixed_.insert(j);
  if (!has_first_column_component()) fixed_.insert(0);
}

int SkewShape::epsilon() const {
  int e = 0;
  for (const Component& d : components_)
    if (!d.meets_first_column) ++e;
  return e;
}

int SkewShape::occupied_columns() const {
  std::set<int> cols;
  for (const Box& b : boxes_) cols.insert(b.col);
  return static_cast<int>(cols.size());
}

bool SkewShape::has_first_column_component() const {
  return first_column_component() != nullptr;
}

const Component* SkewShape::first_column_component() const {
  for (const Component& d : components_)
    if (d.meets_first_column) return &d;
  return nullptr;
}

bool SkewShape::is_skew_row() const {
  // lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_n on the full signed sequences
  std::vector<int> lam = lambda_.entries(), m = mu_.entries();
  for (int j = 0; j < n(); ++j) {
    if (lam[j] < m[j]) return false;
    if (j + 1 < n() && m[j] < lam[j + 1]) return false;
  }
  return true;
}

std::tuple<int, int, int> SkewShape::column_identity() const {
  int p = phi(), d = delta(), c = occupied_columns();
  require(p + d + c == n() + 1, errc::identity_violated,
          "phi+delta+cols != n+1 for " + lambda_.to_string() + " / " + mu_.to_string());
  return {p, d, c};
}

bool SkewShape::coverage_partition_ok() const {
  // every index 0..n covered exactly once
  std::map<int, int> count;
  for (int j : fixed_) count[j == 0 ? 0 : std::abs(lambda_.entry(j))]++;
  for (const Component& d : components_)
    for (int c : d.col()) count[c]++;
  for (int i = 0; i <= n(); ++i)
    if (count[i] != 1) return false;
  return static_cast<int>(count.size()) == n() + 1;
}

std::string SkewShape::render() const {
  std::vector<int> lam = lambda_.entries(), m = mu_.entries();
  // component label per box
  std::map<Box, char> label;
  char next = 'A';
  for (const Component& d : components_) {
    for (const Box& b : d.boxes) label[b] = next;
    ++next;
  }
  std::ostringstream os;
  int last_row = 0;
  for (int j = 1; j <= n(); ++j)
    if (lam[j - 1] > 0) last_row = j;
  for (int j = 1; j <= last_row; ++j) {
    std::string line;
    int lj = std::max(lam[j - 1], 0), mj = std::max(m[j - 1], 0);
    for (int c = 1; c <= lj; ++c) {
      if (!line.empty()) line += ' ';
      line += (c <= mj) ? '.' : label[{j, c}];
    }
    os << line << "\n";
  }
  return os.str();
}

std::string SkewShape::summary() const {
  auto [p, d, c] = column_identity();
  std::ostringstream os;
  os << "phi=" << p << " delta=" << d << " eps=" << epsilon() << " cols=" << c
     << " check=" << (p + d + c);
  return os.str();
}

std::vector<StrictPartition> all_strict_partitions(int n) {
  std::vector<StrictPartition> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> parts;
    for (int a = n; a >= 1; --a)
      if (mask & (1u << (a - 1))) parts.push_back(a);
    out.push_back(StrictPartition(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedSequence> all_signed_sequences(int n) {
  std::vector<SignedSequence> out;
  for (const StrictPartition& p : all_strict_partitions(n))
    out.push_back(SignedSequence(n, p));
  return out;
}

}  // namespace isogr
