// Microbenchmarks for the hot paths: field arithmetic, linear algebra over
// small finite fields, canonical forms, and the two counting pipelines.
//
// Run:  build/benchmarks/qcommute_bench [--benchmark_filter=...]
// All inputs are fixed and deterministic so runs are comparable.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qcommute/canonical_form.hpp"
#include "qcommute/counting.hpp"
#include "qcommute/field.hpp"
#include "qcommute/matrix.hpp"
#include "qcommute/series.hpp"

namespace {

using namespace qcommute;

// Deterministic entry stream for building "generic" matrices.
std::uint32_t lcg_next(std::uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint32_t>(s >> 33);
}

FieldMatrix generic_matrix(const FieldPtr& f, unsigned n, std::uint64_t seed) {
  std::vector<std::uint32_t> entries(std::size_t(n) * n);
  for (auto& e : entries) e = lcg_next(seed) % f->size();
  return FieldMatrix(f, n, n, std::move(entries));
}

void BM_FieldMulTabled(benchmark::State& state) {
  auto f = Field::make(3, 2);  // GF(9): multiplication served from dense tables
  std::uint32_t acc = 1;
  for (auto _ : state) {
    for (std::uint32_t a = 1; a < 9; ++a) acc = f->mul(acc, a);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 8);
}

void BM_FieldMulPolynomial(benchmark::State& state) {
  auto f = Field::make(2, 10);  // GF(1024): above the table cap, reduced per call
  std::uint32_t acc = 1;
  for (auto _ : state) {
    for (std::uint32_t a = 2; a < 10; ++a) acc = f->mul(acc | 1, a);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 8);
}

void BM_MatrixRank(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  auto f = Field::make(7);
  const FieldMatrix a = generic_matrix(f, n, 2026);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.rank());
  }
}

void BM_TwistedCentralizerDim(benchmark::State& state) {
  auto f = Field::make(5);
  const FieldMatrix a = generic_matrix(f, 3, 7);
  const FieldElement zeta = f->element(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twisted_centralizer_dim(a, zeta));
  }
}

void BM_InvariantFactors(benchmark::State& state) {
  auto f = Field::make(5);
  const FieldMatrix a = generic_matrix(f, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_factors(a));
  }
}

void BM_SeriesBuild(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_generating_series(CountSet::pairs, 2, order));
  }
}

void BM_CountPolynomial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const XSeries series = class_generating_series(CountSet::pairs, 2, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_polynomial(series, n));
  }
}

void BM_CountPairsClosedForm(benchmark::State& state) {
  // Counts are memoized per (set, n, m, q); a fresh q each iteration keeps
  // this measuring the computation instead of the cache lookup.
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::uint64_t q = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_pairs(n, 2, BigInt(q++)));
  }
}

void BM_CountPairsMemoized(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const BigInt q(3);
  count_pairs(n, 2, q);  // warm the memo
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_pairs(n, 2, q));
  }
}

BENCHMARK(BM_FieldMulTabled);
BENCHMARK(BM_FieldMulPolynomial);
BENCHMARK(BM_MatrixRank)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_TwistedCentralizerDim);
BENCHMARK(BM_InvariantFactors);
BENCHMARK(BM_SeriesBuild)->Arg(8)->Arg(12);
BENCHMARK(BM_CountPolynomial)->Arg(6)->Arg(10);
BENCHMARK(BM_CountPairsClosedForm)->Arg(6)->Arg(10);
BENCHMARK(BM_CountPairsMemoized)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
