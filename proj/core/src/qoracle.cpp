#include "isogr/qoracle.hpp"

#include <algorithm>
#include <mutex>

namespace isogr {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::coefficient_overflow, "int64 addition overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::coefficient_overflow, "int64 multiplication overflow");
  return r;
}

}  // namespace

SymPoly SymPoly::constant(int nvars, long long c) {
  SymPoly p(nvars);
  p.add_term(0, c);
  return p;
}

SymPoly::Key SymPoly::pack(const std::vector<int>& exps) {
  require(exps.size() <= 8, errc::wrong_dimension, "at most 8 variables supported");
  Key k = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    require(exps[i] >= 0 && exps[i] < 256, errc::coefficient_overflow, "exponent out of range");
    k |= static_cast<Key>(exps[i]) << (8 * (7 - i));
  }
  return k;
}

std::vector<int> SymPoly::unpack(Key k, int nvars) {
  std::vector<int> exps(nvars);
  for (int i = 0; i < nvars; ++i) exps[i] = static_cast<int>((k >> (8 * (7 - i))) & 0xff);
  return exps;
}

int SymPoly::total_degree() const {
  int deg = 0;
  for (const auto& [k, c] : terms_) {
    int d = 0;
    for (int e : unpack(k, nvars_)) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

void SymPoly::add_term(Key k, long long c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

long long SymPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(pack(exps));
  return it == terms_.end() ? 0 : it->second;
}

SymPoly SymPoly::operator+(const SymPoly& rhs) const {
  SymPoly out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
  return out;
}

SymPoly SymPoly::operator-(const SymPoly& rhs) const {
  SymPoly out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add_term(k, checked_mul(c, -1));
  return out;
}

SymPoly SymPoly::operator*(const SymPoly& rhs) const {
  // exponents stay below 256, so packed keys add like integers
  SymPoly out(nvars_);
  const SymPoly& small = terms_.size() <= rhs.terms_.size() ? *this : rhs;
  const SymPoly& large = terms_.size() <= rhs.terms_.size() ? rhs : *this;
  for (const auto& [ks, cs] : small.terms_)
    for (const auto& [kl, cl] : large.terms_) out.add_term(ks + kl, checked_mul(cs, cl));
  return out;
}

SymPoly SymPoly::scaled(long long c) const {
  SymPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.add_term(k, checked_mul(v, c));
  return out;
}

std::pair<SymPoly::Key, long long> SymPoly::leading() const {
  require(!terms_.empty(), errc::not_in_span, "leading term of zero polynomial");
  return *terms_.begin();
}

SymPoly SymPoly::swapped_vars(int i) const {
  SymPoly out(nvars_);
  for (const auto& [k, c] : terms_) {
    std::vector<int> e = unpack(k, nvars_);
    std::swap(e[i - 1], e[i]);
    out.add_term(pack(e), c);
  }
  return out;
}

namespace {

std::mutex cache_mutex;

struct PairKey {
  int a, b, N;
  auto operator<=>(const PairKey&) const = default;
};

SymPoly q_poly_uncached(int r, int N) {
  require(N >= 1, errc::too_few_variables, "need at least one variable");
  require(r >= 0, errc::m_out_of_range, "q_r needs r >= 0");
  // series coefficients of prod (1+x_i t)/(1-x_i t), one variable at a time
  std::vector<SymPoly> coef(r + 1, SymPoly(N));
  coef[0] = SymPoly::constant(N, 1);
  for (int var = 1; var <= N; ++var) {
    // (1+x t)/(1-x t) = 1 + 2 sum_{s>=1} x^s t^s
    std::vector<SymPoly> next(r + 1, SymPoly(N));
    for (int d = 0; d <= r; ++d) {
      next[d] = coef[d];
      for (int s = 1; s <= d; ++s) {
        std::vector<int> mono(N, 0);
        mono[var - 1] = s;
        SymPoly xs(N);
        xs.add_term(SymPoly::pack(mono), 2);
        next[d] = next[d] + coef[d - s] * xs;
      }
    }
    coef = std::move(next);
  }
  return coef[r];
}

SymPoly q_poly_cached(int r, int N) {
  static std::map<std::pair<int, int>, SymPoly> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({r, N});
  if (it != cache.end()) return it->second;
  SymPoly p = q_poly_uncached(r, N);
  cache.emplace(std::make_pair(r, N), p);
  return p;
}

SymPoly q_pair_uncached(int a, int b, int N) {
  if (b == 0) return q_poly_cached(a, N);
  if (a == b) return SymPoly(N);
  if (a < b) return q_pair_uncached(b, a, N).scaled(-1);
  SymPoly out = q_poly_cached(a, N) * q_poly_cached(b, N);
  for (int i = 1; i <= b; ++i) {
    SymPoly term = q_poly_cached(a + i, N) * q_poly_cached(b - i, N);
    out = out + term.scaled(i % 2 == 0 ? 2 : -2);
  }
  return out;
}

SymPoly q_pair_cached(int a, int b, int N) {
  static std::map<PairKey, SymPoly> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({a, b, N});
    if (it != cache.end()) return it->second;
  }
  SymPoly p = q_pair_uncached(a, b, N);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(PairKey{a, b, N}, p);
  return p;
}

// Pfaffian by first-row expansion over the strictly decreasing list of
// parts (trailing zero pad allowed); sub-lists are again strictly
// decreasing, so memoising on the stripped partition is enough.
SymPoly pfaffian_of_parts(const std::vector<int>& parts, int N);

SymPoly q_lambda_cached(const StrictPartition& lambda, int N) {
  static std::map<std::pair<std::vector<int>, int>, SymPoly> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({lambda.parts(), N});
    if (it != cache.end()) return it->second;
  }
  std::vector<int> parts = lambda.parts();
  if (parts.size() % 2 == 1) parts.push_back(0);
  SymPoly p = parts.empty() ? SymPoly::constant(N, 1) : pfaffian_of_parts(parts, N);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(lambda.parts(), N), p);
  return p;
}

SymPoly pfaffian_of_parts(const std::vector<int>& parts, int N) {
  const int sz = static_cast<int>(parts.size());
  if (sz == 0) return SymPoly::constant(N, 1);
  if (sz == 2) return q_pair_cached(parts[0], parts[1], N);
  SymPoly out(N);
  for (int j = 1; j < sz; ++j) {
    std::vector<int> rest;
    for (int i = 1; i < sz; ++i)
      if (i != j) rest.push_back(parts[i]);
    // rest is strictly decreasing with at most one trailing zero
    std::vector<int> stripped = rest;
    while (!stripped.empty() && stripped.back() == 0) stripped.pop_back();
    SymPoly sub = q_lambda_cached(StrictPartition(stripped), N);
    SymPoly piece = q_pair_cached(parts[0], parts[j], N) * sub;
    // expansion sign (-1)^(j+1) with 0-based j -> entry (1, j+1) of the matrix
    out = out + (j % 2 == 1 ? piece : piece.scaled(-1));
  }
  return out;
}

}  // namespace

SymPoly q_poly(int r, int N) { return q_poly_cached(r, N); }

SymPoly q_pair(int a, int b, int N) {
  require(a >= 0 && b >= 0, errc::m_out_of_range, "q_pair needs a, b >= 0");
  return q_pair_cached(a, b, N);
}

SymPoly q_lambda(const StrictPartition& lambda, int N) {
  require(N >= lambda.length(), errc::too_few_variables,
          "q_lambda needs at least l(lambda) variables");
  return q_lambda_cached(lambda, N);
}

std::map<StrictPartition, long long> expand_in_q_basis(const SymPoly& p, int degree) {
  std::map<StrictPartition, long long> out;
  SymPoly rest = p;
  SymPoly::Key prev_key = ~SymPoly::Key(0);
  while (!rest.is_zero()) {
    auto [key, c] = rest.leading();
    require(key < prev_key, errc::not_in_span, "leading monomial failed to decrease");
    prev_key = key;
    std::vector<int> exps = SymPoly::unpack(key, rest.nvars());
    std::vector<int> parts;
    int d = 0;
    for (int e : exps) {
      if (e > 0) parts.push_back(e);
      d += e;
    }
    require(d == degree, errc::not_in_span, "polynomial not homogeneous of the stated degree");
    for (size_t i = 0; i + 1 < parts.size(); ++i)
      require(parts[i] > parts[i + 1], errc::not_in_span,
              "leading exponent vector is not strictly decreasing");
    // trailing zeros after a zero only
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] == 0)
        for (size_t j = i; j < exps.size(); ++j)
          require(exps[j] == 0, errc::not_in_span, "leading exponents not left-justified");
    StrictPartition lam(parts);
    long long denom = 1LL << lam.length();
    require(c % denom == 0, errc::not_in_span, "leading coefficient not divisible by 2^l");
    long long mult = c / denom;
    out[lam] = mult;
    rest = rest - q_lambda(lam, rest.nvars()).scaled(mult);
  }
  return out;
}

int oracle_variable_count(int degree) {
  int l = 1;
  while ((l + 1) * (l + 2) / 2 <= degree) ++l;
  return l;
}

std::map<StrictPartition, long long> oracle_pieri(Family family, const StrictPartition& mu,
                                                  int m, int n) {
  for (int p : mu.parts())
    require(p <= n, errc::part_exceeds_n, "mu part exceeds n");
  require(m >= 1 && m <= n, errc::m_out_of_range, "need 1 <= m <= n");
  const int degree = mu.weight() + m;
  // Every strict partition of `degree` has at most this many parts, so no
  // q_lambda of the right degree dies in the restriction and the triangular
  // peeling is complete.
  const int N = std::max(oracle_variable_count(degree), mu.length());
  SymPoly product = q_poly(m, N) * q_lambda(mu, N);
  std::map<StrictPartition, long long> expanded = expand_in_q_basis(product, degree);
  std::map<StrictPartition, long long> out;
  for (const auto& [lam, c] : expanded) {
    if (lam.part(0) > n) continue;
    long long value = c;
    if (family == Family::B) {
      int shift = lam.length() - mu.length() - 1;
      if (shift >= 0) {
        value = checked_mul(c, 1LL << shift);
      } else {
        long long denom = 1LL << (-shift);
        require(c % denom == 0, errc::non_integral_adjustment,
                "family-B rescale must stay integral");
        value = c / denom;
      }
    }
    require(value > 0, errc::non_integral_adjustment, "coefficients must be positive");
    out[lam] = value;
  }
  return out;
}

}  // namespace isogr
