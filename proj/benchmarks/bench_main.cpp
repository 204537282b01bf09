#include <benchmark/benchmark.h>

#include <sstream>

#include "isogr/geometry.hpp"
#include "isogr/qoracle.hpp"
#include "isogr/ring.hpp"

using namespace isogr;

namespace {

const char* kWorkedK =
    "orthogonal n=4\n"
    "0 1 0 1 0 0 1 0 1\n"
    "1 1 0 1 2 -2 1 1 -1\n"
    "0 0 1 0 0 -1 0 0 0\n";

Subspace load_k() {
  std::istringstream in(kWorkedK);
  std::string kind;
  int n = 0;
  return read_subspace(in, kind, n);
}

void BM_pieri_rank4(benchmark::State& state) {
  SignedSequence mu = SignedSequence::parse("3,2,-1,-4", 4);
  for (auto _ : state) benchmark::DoNotOptimize(pieri(Family::B, mu, 2));
}
BENCHMARK(BM_pieri_rank4);

void BM_pieri_rank6_full(benchmark::State& state) {
  SignedSequence mu = SignedSequence::from_partition(StrictPartition({5, 3, 1}), 6);
  for (auto _ : state)
    for (int m = 1; m <= 6; ++m) benchmark::DoNotOptimize(pieri(Family::C, mu, m));
}
BENCHMARK(BM_pieri_rank6_full);

void BM_oracle_pieri(benchmark::State& state) {
  StrictPartition mu({3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_pieri(Family::C, mu, 2, 4));
}
BENCHMARK(BM_oracle_pieri);

void BM_q_lambda_staircase(benchmark::State& state) {
  // dominated by polynomial multiplication in the pfaffian expansion;
  // the shared cache is what the oracle sweep actually exercises
  StrictPartition lam({5, 4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(q_lambda(lam, 5));
}
BENCHMARK(BM_q_lambda_staircase);

void BM_lines_in_k(benchmark::State& state) {
  OrthogonalSpace sp(4);
  SignedSequence lam = SignedSequence::parse("4,2,1,-3", 4);
  SignedSequence mu = SignedSequence::parse("3,2,-1,-4", 4);
  Subspace k = load_k();
  FormSystem fs = z_forms(lam, mu);
  for (auto _ : state) benchmark::DoNotOptimize(lines_in_K(k, fs, sp));
}
BENCHMARK(BM_lines_in_k);

void BM_reconstruct(benchmark::State& state) {
  SignedSequence lam = SignedSequence::parse("4,2,1,-3", 4);
  SignedSequence mu = SignedSequence::parse("3,2,-1,-4", 4);
  OrthogonalSpace sp(4);
  FormSystem fs = z_forms(lam, mu);
  Subspace k = load_k();
  Vec v = lines_in_K(k, fs, sp)[1].basis_row(0);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_from_line(lam, mu, v));
}
BENCHMARK(BM_reconstruct);

void BM_triple_random(benchmark::State& state) {
  SignedSequence lam = SignedSequence::from_partition(StrictPartition({5, 3, 1}), 5);
  SignedSequence mu = SignedSequence::from_partition(StrictPartition({3, 1}), 5);
  Rng rng(7);
  Subspace k = sample_isotropic_k(lam, mu, rng);
  for (auto _ : state) benchmark::DoNotOptimize(triple_intersect(lam, mu, k));
}
BENCHMARK(BM_triple_random);

void BM_rref_13x13(benchmark::State& state) {
  Rng rng(11);
  Matrix m(13, 13);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) m.at(i, j) = rng.small_rational();
  for (auto _ : state) {
    Matrix copy = m;
    benchmark::DoNotOptimize(copy.rref());
  }
}
BENCHMARK(BM_rref_13x13);

}  // namespace

BENCHMARK_MAIN();
