#include "isogr/ring.hpp"

#include <json.hpp>

#include <sstream>

namespace isogr {

Family parse_family(const std::string& s) {
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  fail(errc::parse_error, "family must be B or C, got '" + s + "'");
}

ClassVector ClassVector::unit(Family family, int n, const StrictPartition& p, Int coeff) {
  ClassVector v(family, n);
  v.add(p, coeff);
  return v;
}

Int ClassVector::coeff(const StrictPartition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Int(0) : it->second;
}

void ClassVector::add(const StrictPartition& p, const Int& c) {
  for (int part : p.parts())
    require(part <= n_, errc::part_exceeds_n, "term index part exceeds n");
  if (c == 0) return;
  Int& slot = terms_[p];
  slot += c;
  if (slot == 0) terms_.erase(p);
}

namespace {

// Strict partitions nu with |nu| = |mu| + m, parts <= n, interlacing mu
// (nu_i >= mu_i >= nu_{i+1}).  Candidates only; the signed skew-row test
// below is the authoritative filter.
void interlacing_candidates(const std::vector<int>& mu, int n, int i, int remaining, int prev,
                            std::vector<int>& acc, std::vector<StrictPartition>& out) {
  const int len = static_cast<int>(mu.size());
  const int mu_i = i < len ? mu[i] : 0;
  if (remaining == 0 && mu_i == 0) {
    out.push_back(StrictPartition(acc));
    return;
  }
  int upper = std::min(n, prev - 1);
  if (i >= 1) upper = std::min(upper, i - 1 < len ? mu[i - 1] : 0);
  upper = std::min(upper, remaining);
  for (int v = upper; v >= std::max(mu_i, 1); --v) {
    acc.push_back(v);
    interlacing_candidates(mu, n, i + 1, remaining - v, v, acc, out);
    acc.pop_back();
  }
}

}  // namespace

ClassVector pieri(Family family, const SignedSequence& mu, int m) {
  const int n = mu.n();
  require(m >= 1 && m <= n, errc::m_out_of_range, "need 1 <= m <= n");
  ClassVector out(family, n);
  std::vector<StrictPartition> candidates;
  std::vector<int> acc;
  interlacing_candidates(mu.positive().parts(), n, 0, mu.codim() + m, n + 1, acc, candidates);
  for (const StrictPartition& nu : candidates) {
    SignedSequence lambda = SignedSequence::from_partition(nu, n);
    if (!bruhat_leq(mu, lambda)) continue;
    SkewShape sk(lambda, mu);
    if (!sk.is_skew_row()) continue;
    unsigned long e = family == Family::B ? static_cast<unsigned long>(sk.delta() - 1)
                                          : static_cast<unsigned long>(sk.epsilon());
    out.add(nu, pow2(e));
  }
  return out;
}

ClassVector multiply_special(const ClassVector& v, int m) {
  ClassVector out(v.family(), v.n());
  for (const auto& [p, c] : v.terms()) {
    ClassVector part = pieri(v.family(), SignedSequence::from_partition(p, v.n()), m);
    for (const auto& [q, d] : part.terms()) out.add(q, c * d);
  }
  return out;
}

Int pairing(const ClassVector& v, const ClassVector& w) {
  require(v.family() == w.family() && v.n() == w.n(), errc::mismatched_n,
          "pairing needs matching family and n");
  Int s = 0;
  for (const auto& [p, c] : v.terms()) {
    SignedSequence lam = SignedSequence::from_partition(p, v.n());
    s += c * w.coeff(lam.complement().positive());
  }
  return s;
}

Int triple_number(Family family, const SignedSequence& mu, const SignedSequence& lambda, int m) {
  require(mu.n() == lambda.n(), errc::mismatched_n, "triple_number needs equal n");
  require(lambda.codim() == mu.codim() + m, errc::degree_mismatch,
          "need codim(lambda) = codim(mu) + m");
  if (!bruhat_leq(mu, lambda)) return 0;
  SkewShape sk(lambda, mu);
  if (!sk.is_skew_row()) return 0;
  return family == Family::B ? pow2(static_cast<unsigned long>(sk.delta() - 1))
                             : pow2(static_cast<unsigned long>(sk.epsilon()));
}

std::string render_text(const ClassVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << class_letter(v.family()) << "[" << p.to_string() << "]";
  }
  return os.str();
}

std::string render_json(const ClassVector& v) {
  nlohmann::ordered_json j;
  j["family"] = std::string(1, family_letter(v.family()));
  j["n"] = v.n();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [p, c] : v.terms()) {
    nlohmann::ordered_json t;
    t["parts"] = p.parts();
    require(c.fits_slong_p(), errc::coefficient_overflow, "coefficient too large for JSON");
    t["coeff"] = c.get_si();
    j["terms"].push_back(t);
  }
  return j.dump();
}

ClassVector parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ClassVector v(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    StrictPartition p(t.at("parts").get<std::vector<int>>());
    v.add(p, Int(t.at("coeff").get<long>()));
  }
  return v;
}

}  // namespace isogr
