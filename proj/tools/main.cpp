// isogr command line: Pieri products, skew diagrams, validation sweeps and
// exact triple-intersection runs.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isogr/geometry.hpp"
#include "isogr/qoracle.hpp"
#include "isogr/ring.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr std::uint64_t kDefaultSeed = 20108;

using namespace isogr;

// "3,2" with --n, or a full signed sequence like "3,2,-1,-4"
SignedSequence parse_sequence_arg(const std::string& text, int n) {
  std::string t = text;
  size_t commas = std::count(t.begin(), t.end(), ',');
  bool has_tokens = t.find_first_not_of(" \t") != std::string::npos;
  if (has_tokens && static_cast<int>(commas) + 1 == n) {
    try {
      return SignedSequence::parse(t, n);
    } catch (const error&) {
      // fall through to the partition reading
    }
  }
  return SignedSequence::from_partition(StrictPartition::parse(t), n);
}

int run_pieri(const std::string& family, const std::string& mu_text, int n, int m, bool json) {
  Family fam = parse_family(family);
  SignedSequence mu = parse_sequence_arg(mu_text, n);
  ClassVector v = pieri(fam, mu, m);
  if (json) {
    std::cout << render_json(v) << "\n";
  } else if (v.empty()) {
    std::cout << "0  (no expansion terms: every candidate class needs a part > n)\n";
  } else {
    std::cout << render_text(v) << "\n";
  }
  return kExitOk;
}

int run_diagram(const std::string& lambda_text, const std::string& mu_text, int n) {
  SignedSequence lambda = parse_sequence_arg(lambda_text, n);
  SignedSequence mu = parse_sequence_arg(mu_text, n);
  SkewShape sk(lambda, mu);
  std::cout << "lambda = " << lambda.to_string() << "\n";
  std::cout << "mu     = " << mu.to_string() << "\n";
  std::string grid = sk.render();
  if (grid.empty()) grid = "(empty diagram)\n";
  std::cout << grid;
  std::cout << "fixed points = {";
  bool first = true;
  for (int j : sk.fixed_points()) {
    if (!first) std::cout << ",";
    std::cout << j;
    first = false;
  }
  std::cout << "}\n";
  std::cout << sk.summary() << "\n";
  std::cout << "skew row: " << (sk.is_skew_row() ? "yes" : "no") << "\n";
  return kExitOk;
}

struct SweepReport {
  long cases = 0;
  bool failed = false;
  std::string counterexample;
};

void sweep_fail(SweepReport& rep, const std::string& what) {
  if (!rep.failed) {
    rep.failed = true;
    rep.counterexample = what;
  }
}

SweepReport sweep_duality(int n_max) {
  SweepReport rep;
  for (int n = 1; n <= n_max; ++n) {
    for (const SignedSequence& mu : all_signed_sequences(n)) {
      for (const SignedSequence& lam : all_signed_sequences(n)) {
        Int got = pairing(ClassVector::unit(Family::B, n, mu.positive()),
                          ClassVector::unit(Family::B, n, lam.complement().positive()));
        Int want = mu == lam ? 1 : 0;
        ++rep.cases;
        if (got != want) {
          sweep_fail(rep, "pairing(P_" + mu.to_string() + ", dual of " + lam.to_string() +
                             ") = " + got.get_str());
          return rep;
        }
      }
    }
  }
  return rep;
}

SweepReport sweep_columns(int n_max) {
  SweepReport rep;
  for (int n = 1; n <= n_max; ++n) {
    for (const SignedSequence& mu : all_signed_sequences(n)) {
      for (const SignedSequence& lam : all_signed_sequences(n)) {
        if (!bruhat_leq(mu, lam)) continue;
        SkewShape sk(lam, mu);
        ++rep.cases;
        try {
          sk.column_identity();
        } catch (const error&) {
          sweep_fail(rep, "column identity fails for " + lam.to_string() + " / " + mu.to_string());
          return rep;
        }
        if (!sk.coverage_partition_ok()) {
          sweep_fail(rep, "coverage partition fails for " + lam.to_string() + " / " +
                             mu.to_string());
          return rep;
        }
      }
    }
  }
  return rep;
}

SweepReport sweep_oracle(int n_max) {
  SweepReport rep;
  for (int n = 1; n <= n_max; ++n) {
    for (const StrictPartition& mu : all_strict_partitions(n)) {
      for (int m = 1; m <= n; ++m) {
        for (Family fam : {Family::B, Family::C}) {
          SignedSequence muse = SignedSequence::from_partition(mu, n);
          ClassVector ring = pieri(fam, muse, m);
          auto oracle = oracle_pieri(fam, mu, m, n);
          ++rep.cases;
          for (const auto& [p, c] : ring.terms()) {
            auto it = oracle.find(p);
            if (it == oracle.end() || to_int(it->second) != c) {
              sweep_fail(rep, std::string("family ") + family_letter(fam) + " mu=" +
                                  mu.to_string() + " m=" + std::to_string(m) + " n=" +
                                  std::to_string(n) + ": ring term " + p.to_string() +
                                  " disagrees with the oracle");
              return rep;
            }
          }
          for (const auto& [p, c] : oracle) {
            if (ring.coeff(p) != to_int(c)) {
              sweep_fail(rep, std::string("family ") + family_letter(fam) + " mu=" +
                                  mu.to_string() + " m=" + std::to_string(m) + " n=" +
                                  std::to_string(n) + ": oracle term " + p.to_string() + " -> " +
                                  std::to_string(c) + " missing from the ring");
              return rep;
            }
          }
        }
      }
    }
  }
  return rep;
}

SweepReport sweep_commutativity(int n_max) {
  SweepReport rep;
  for (int n = 1; n <= n_max; ++n) {
    for (const SignedSequence& mu : all_signed_sequences(n)) {
      for (int a = 1; a <= n; ++a) {
        for (int b = a; b <= n; ++b) {
          ClassVector ab = multiply_special(pieri(Family::B, mu, a), b);
          ClassVector ba = multiply_special(pieri(Family::B, mu, b), a);
          ++rep.cases;
          if (!(ab == ba)) {
            sweep_fail(rep, "p_a p_b != p_b p_a at mu=" + mu.to_string() + " a=" +
                               std::to_string(a) + " b=" + std::to_string(b));
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

int run_check(int n_max, std::uint64_t /*seed*/) {
  struct Named {
    const char* name;
    SweepReport rep;
  };
  std::vector<Named> sweeps;
  sweeps.push_back({"duality", sweep_duality(std::min(n_max, 6))});
  sweeps.push_back({"column identity + coverage", sweep_columns(std::min(n_max, 6))});
  sweeps.push_back({"oracle equivalence", sweep_oracle(std::min(n_max, 5))});
  sweeps.push_back({"pieri commutativity", sweep_commutativity(std::min(n_max, 5))});
  long total = 0;
  for (const Named& s : sweeps) {
    if (s.rep.failed) {
      std::cout << "FAIL " << s.name << ": " << s.rep.counterexample << "\n";
      return kExitValidation;
    }
    std::cout << "ok " << s.name << " (" << s.rep.cases << " cases)\n";
    total += s.rep.cases;
  }
  std::cout << "PASS (" << total << " cases)\n";
  return kExitOk;
}

int run_triple(const std::string& lambda_text, const std::string& mu_text, int n,
               const std::string& k_file, bool use_random, std::uint64_t seed) {
  SignedSequence lambda = parse_sequence_arg(lambda_text, n);
  SignedSequence mu = parse_sequence_arg(mu_text, n);
  OrthogonalSpace sp(n);
  int m = lambda.codim() - mu.codim();
  require(m >= 1 && m <= n, errc::m_out_of_range, "codim(lambda) - codim(mu) must lie in 1..n");

  Subspace k_space;
  if (use_random) {
    Rng rng(seed);
    k_space = sample_isotropic_k(lambda, mu, rng);
  } else {
    std::ifstream in(k_file);
    require(in.good(), errc::parse_error, "cannot open '" + k_file + "'");
    std::string kind;
    int file_n = 0;
    k_space = read_subspace(in, kind, file_n);
    require(kind == "orthogonal" && file_n == n, errc::parse_error,
            "K file must be orthogonal with matching n");
    require(is_isotropic(k_space, sp), errc::parse_error, "K in file is not isotropic");
    require(k_space.dim() == n + 1 - m, errc::wrong_dimension,
            "K must have dimension n+1-m = " + std::to_string(n + 1 - m));
  }

  FormSystem fs = z_forms(lambda, mu);
  std::vector<Subspace> lines = lines_in_K(k_space, fs, sp);
  std::cout << "isotropic lines in K on Z_{lambda/mu}: " << lines.size() << "\n";
  for (size_t i = 0; i < lines.size(); ++i) {
    std::cout << "line " << (i + 1) << ":";
    Vec v = lines[i].basis_row(0);
    for (const Rat& c : v) std::cout << " " << format_rational(c);
    std::cout << "\n";
  }
  std::vector<Subspace> solutions;
  for (const Subspace& line : lines)
    solutions.push_back(reconstruct_from_line(lambda, mu, line.basis_row(0)));
  for (size_t i = 0; i < solutions.size(); ++i) {
    std::cout << "H_" << (i + 1) << ":\n";
    std::ostringstream os;
    write_subspace(os, solutions[i], "orthogonal", n);
    std::istringstream is(os.str());
    std::string first_line;
    std::getline(is, first_line);  // drop the header inside the report
    std::string row;
    while (std::getline(is, row)) std::cout << "  " << row << "\n";
  }
  Int expected = triple_number(Family::B, mu, lambda, m);
  std::cout << "count=" << solutions.size() << " expected=" << expected.get_str() << "\n";
  if (to_int(static_cast<long long>(solutions.size())) != expected) return kExitValidation;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus on maximal isotropic Grassmannians"};
  app.require_subcommand(1);

  std::string family = "B", mu_text, lambda_text, k_file;
  int n = 0, m = 0, n_max = 4;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  bool use_random = false;

  CLI::App* c_pieri = app.add_subcommand("pieri", "expand a special-class product");
  c_pieri->add_option("--family", family, "B or C")->required();
  c_pieri->add_option("--mu", mu_text, "index as partition '3,2' or full sequence")->required();
  c_pieri->add_option("--n", n, "rank n")->required();
  c_pieri->add_option("--m", m, "row length of the special class")->required();
  c_pieri->add_flag("--json", json, "emit the JSON schema");

  CLI::App* c_diagram = app.add_subcommand("diagram", "render a skew diagram");
  c_diagram->add_option("--lambda", lambda_text)->required();
  c_diagram->add_option("--mu", mu_text)->required();
  c_diagram->add_option("--n", n)->required();

  CLI::App* c_check = app.add_subcommand("check", "run the validation sweeps");
  c_check->add_option("--n-max", n_max, "largest rank to sweep (default 4)");
  c_check->add_option("--seed", seed, "seed for randomized pieces");

  CLI::App* c_triple = app.add_subcommand("triple", "solve a triple intersection");
  c_triple->add_option("--lambda", lambda_text)->required();
  c_triple->add_option("--mu", mu_text)->required();
  c_triple->add_option("--n", n)->required();
  CLI::Option* kopt = c_triple->add_option("--k-file", k_file, "matrix file for K");
  CLI::Option* ropt =
      c_triple->add_option("--random", seed, "sample a random isotropic K with this seed");
  kopt->excludes(ropt);

  CLI11_PARSE(app, argc, argv);
  use_random = ropt->count() > 0;

  try {
    if (c_pieri->parsed()) return run_pieri(family, mu_text, n, m, json);
    if (c_diagram->parsed()) return run_diagram(lambda_text, mu_text, n);
    if (c_check->parsed()) return run_check(n_max, seed);
    if (c_triple->parsed()) {
      if (!use_random && k_file.empty()) {
        std::cerr << "error: triple needs --k-file or --random\n";
        return kExitInput;
      }
      return run_triple(lambda_text, mu_text, n, k_file, use_random, seed);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == errc::degenerate_input) {
      std::cerr << "hint: the sample degenerated; rerun with a different --seed\n";
      return kExitDegenerate;
    }
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
