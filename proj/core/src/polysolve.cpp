#include "isogr/polysolve.hpp"

#include <algorithm>
#include <optional>

namespace isogr {

namespace {

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int sign(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

int degree(const UniPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

Rat eval(const UniPoly& p, const Rat& x) {
  Rat v = 0;
  for (int i = degree(p); i >= 0; --i) v = v * x + p[i];
  return v;
}

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  trim(d);
  return d;
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UniPoly sub(const UniPoly& a, const UniPoly& b) {
  UniPoly out = a;
  out.resize(std::max(a.size(), b.size()));
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UniPoly rem(const UniPoly& a, const UniPoly& b) {
  int db = degree(b);
  require(db >= 0, errc::division_by_zero, "polynomial remainder by zero");
  UniPoly r = a;
  trim(r);
  while (degree(r) >= db) {
    int dr = degree(r);
    Rat f = r[dr] / b[db];
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
    trim(r);
  }
  return r;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int d = degree(a);
  if (d >= 0) {
    Rat lead = a[d];
    for (Rat& c : a) c /= lead;
  }
  return a;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  require(lo <= hi, errc::degenerate_input, "empty interval");
  // both endpoints included
  Int lo_ceil, hi_floor;
  mpz_cdiv_q(lo_ceil.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(hi_floor.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  if (lo_ceil <= hi_floor) {
    if (lo <= 0 && 0 <= hi) return Rat(0);
    return lo > 0 ? Rat(lo_ceil) : Rat(hi_floor);
  }
  // same integer gap: x = n + 1/y
  Rat n(hi_floor);  // floor(lo) == floor(hi) here
  Rat inner = simplest_between(1 / (hi - n), 1 / (lo - n));
  return n + 1 / inner;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p);
  UniPoly d = derivative(p);
  if (degree(d) >= 0) chain.push_back(d);
  while (chain.size() >= 2) {
    UniPoly r = rem(chain[chain.size() - 2], chain.back());
    if (degree(r) < 0) break;
    for (Rat& c : r) c = -c;
    chain.push_back(r);
  }
  return chain;
}

int variations(const std::vector<UniPoly>& chain, const Rat& x) {
  int v = 0, prev = 0;
  for (const UniPoly& q : chain) {
    int s = sign(eval(q, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

Rat cauchy_bound(const UniPoly& p) {
  int d = degree(p);
  Rat m = 0;
  for (int i = 0; i < d; ++i) m = std::max(m, Rat(abs(p[i] / p[d])));
  return m + 1;
}

// Identify the root inside an isolating open interval as a rational, or
// report that it is not (within a generous height cap).
std::optional<Rat> identify_root(const UniPoly& p, Rat lo, Rat hi) {
  int slo = sign(eval(p, lo));
  for (int round = 0; round < 48; ++round) {
    Rat cand = simplest_between(lo, hi);
    if (eval(p, cand) == 0) return cand;
    // 32 exact bisection steps, then retry
    for (int step = 0; step < 32; ++step) {
      Rat mid = (lo + hi) / 2;
      int sm = sign(eval(p, mid));
      if (sm == 0) return mid;
      if (sm == slo)
        lo = mid;
      else
        hi = mid;
    }
  }
  return std::nullopt;
}

}  // namespace

RootReport rational_roots(const UniPoly& p_in) {
  UniPoly p = p_in;
  trim(p);
  require(degree(p) >= 1, errc::degenerate_input, "rational_roots needs degree >= 1");
  RootReport rep;
  UniPoly g = poly_gcd(p, derivative(p));
  rep.repeated = degree(g) >= 1;
  UniPoly sf = p;
  if (rep.repeated) {
    // square-free part p / gcd by synthetic division
    UniPoly q;
    UniPoly r = p;
    int dg = degree(g);
    while (degree(r) >= dg) {
      int dr = degree(r);
      Rat f = r[dr] / g[dg];
      if (static_cast<int>(q.size()) < dr - dg + 1) q.resize(dr - dg + 1);
      q[dr - dg] = f;
      for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= f * g[i];
      trim(r);
    }
    sf = q;
    trim(sf);
  }

  rep.sf_degree = degree(sf);
  std::vector<UniPoly> chain = sturm_chain(sf);
  Rat bound = cauchy_bound(sf);
  // make sure endpoints are not roots
  while (eval(sf, bound) == 0 || eval(sf, -bound) == 0) bound += 1;
  rep.real_count = variations(chain, -bound) - variations(chain, bound);

  // bisect into isolating intervals
  std::vector<std::pair<Rat, Rat>> work{{-bound, bound}}, isolated;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int count = variations(chain, lo) - variations(chain, hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rat mid = (lo + hi) / 2;
    int guard = 0;
    while (eval(sf, mid) == 0) {
      // exact hit: record and nudge the split point off the root
      rep.roots.push_back(mid);
      mid = lo + (hi - lo) * Rat(2 * guard + 1, 4 * guard + 6);
      if (++guard > 16) fail(errc::degenerate_input, "could not split isolating interval");
    }
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  for (auto& [lo, hi] : isolated) {
    if (eval(sf, lo) == 0) {
      rep.roots.push_back(lo);
      continue;
    }
    if (eval(sf, hi) == 0) {
      rep.roots.push_back(hi);
      continue;
    }
    std::optional<Rat> r = identify_root(sf, lo, hi);
    if (r) rep.roots.push_back(*r);
  }
  std::sort(rep.roots.begin(), rep.roots.end());
  rep.roots.erase(std::unique(rep.roots.begin(), rep.roots.end()), rep.roots.end());
  return rep;
}

BiForm biform_mul(const BiForm& a, const BiForm& b) {
  BiForm out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

BiForm biform_sub(const BiForm& a, const BiForm& b) {
  BiForm out = a;
  out.resize(std::max(a.size(), b.size()));
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

bool biform_is_zero(const BiForm& f) {
  for (const Rat& c : f)
    if (c != 0) return false;
  return true;
}

BiForm conic_resultant(const Rat& a1, const BiForm& b1, const BiForm& c1,
                       const Rat& a2, const BiForm& b2, const BiForm& c2) {
  auto scale = [](const BiForm& f, const Rat& s) {
    BiForm out = f;
    for (Rat& c : out) c *= s;
    return out;
  };
  BiForm ac = biform_sub(scale(c2, a1), scale(c1, a2));          // degree 2
  BiForm ab = biform_sub(scale(b2, a1), scale(b1, a2));          // degree 1
  BiForm bc = biform_sub(biform_mul(b1, c2), biform_mul(b2, c1));  // degree 3
  BiForm out = biform_sub(biform_mul(ac, ac), biform_mul(ab, bc));
  out.resize(5);
  return out;
}

ProjectiveRoots binary_form_roots(const BiForm& f) {
  ProjectiveRoots out;
  if (biform_is_zero(f)) {
    out.identically_zero = true;
    return out;
  }
  const int d = static_cast<int>(f.size()) - 1;
  // f(1, t): the coefficient of t^i is f[i]
  UniPoly p(f.begin(), f.end());
  const int dmax = degree(p);
  // (0 : 1) with multiplicity d - dmax
  if (dmax < d) {
    out.points.emplace_back(0, 1);
    if (d - dmax >= 2) out.repeated = true;
  }
  if (dmax >= 1) {
    RootReport rep = rational_roots(p);
    out.repeated = out.repeated || rep.repeated;
    out.all_rational = rep.split_over_q();
    for (const Rat& r : rep.roots) out.points.emplace_back(1, r);
  }
  return out;
}

}  // namespace isogr
