#include <benchmark/benchmark.h>

#include <random>

#include "invtqft/homology/bar_complex.hpp"
#include "invtqft/homology/sparse.hpp"

using namespace invtqft::homology;

namespace {

// Random sparse integer matrix, mostly +-1 entries.
SparseMatrix random_matrix(std::size_t n, std::size_t per_column, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> row(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_int_distribution<int> coeff(-2, 2);
  SparseMatrix m;
  m.rows = n;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::pair<std::uint32_t, Coefficient>> terms;
    for (std::size_t k = 0; k < per_column; ++k) {
      const int c = coeff(rng);
      if (c != 0) terms.emplace_back(row(rng), c);
    }
    m.columns.push_back(collapse_terms(std::move(terms)));
  }
  return m;
}

const SparseMatrix& bar_matrix() {
  static const SparseMatrix m = [] {
    const BarTower t(5, 2, 7, 50'000'000, false);
    return t.boundary_matrix(2, 7);
  }();
  return m;
}

}  // namespace

static void BM_EliminateSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_serial(m));
}
BENCHMARK(BM_EliminateSerial)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_EliminateParallel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_parallel(m));
}
BENCHMARK(BM_EliminateParallel)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_BarBoundarySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_serial(bar_matrix()));
}
BENCHMARK(BM_BarBoundarySerial)->Iterations(3)->Unit(benchmark::kMillisecond);

static void BM_BarBoundaryParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_parallel(bar_matrix()));
}
BENCHMARK(BM_BarBoundaryParallel)->Iterations(3)->Unit(benchmark::kMillisecond);

static void BM_BarOracle(benchmark::State& state) {
  BarOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(bar_oracle(invtqft::abelian::FgAbGroup::cyclic(4), 3, 6, opts));
}
BENCHMARK(BM_BarOracle)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
