#include <benchmark/benchmark.h>

#include "octa/boundary.hpp"
#include "octa/condensation.hpp"
#include "octa/lattice.hpp"
#include "octa/pentagram.hpp"
#include "octa/random.hpp"

using namespace octa;

static void BM_SymbolicEvolution(benchmark::State& state) {
  const int k = int(state.range(0));
  for (auto _ : state) {
    TField f(InitialSurface::flat_symbolic(Parity::Odd, k + 1));
    benchmark::DoNotOptimize(f(0, mod2(k + 1), k));
  }
}
BENCHMARK(BM_SymbolicEvolution)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_RationalEvolution(benchmark::State& state) {
  const int k = int(state.range(0));
  Rng rng(1);
  InitialSurface s = InitialSurface::flat(Parity::Odd, -k - 1, k + 1, -k - 1, k + 1,
                                          [&](int, int) { return Value(rng.positive_rational(9)); });
  for (auto _ : state) {
    TField f(s);
    benchmark::DoNotOptimize(f(0, mod2(k + 1), k));
  }
}
BENCHMARK(BM_RationalEvolution)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);

static void BM_Dodgson(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(2);
  Matrix m(n, std::vector<Value>(n));
  for (auto& row : m)
    for (auto& v : row) v = Value(Rational(rng.uniform(-9, 9)));
  for (auto _ : state) benchmark::DoNotOptimize(dodgson_determinant(m));
}
BENCHMARK(BM_Dodgson)->DenseRange(4, 12, 4);

static void BM_Bareiss(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(2);
  Matrix m(n, std::vector<Value>(n));
  for (auto& row : m)
    for (auto& v : row) v = Value(Rational(rng.uniform(-9, 9)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m));
}
BENCHMARK(BM_Bareiss)->DenseRange(4, 12, 4);

static void BM_TubePeriod(benchmark::State& state) {
  const int d = int(state.range(0)), ell = int(state.range(1));
  Rng rng(3);
  std::vector<std::vector<Value>> grid(d);
  for (auto& row : grid)
    for (int j = 0; j < ell; ++j) row.push_back(Value(rng.positive_rational(7)));
  for (auto _ : state) {
    TField f = evolve_tube(d, ell, grid, 0, 2 * zamolodchikov_period(d, ell) + 1);
    benchmark::DoNotOptimize(f.cached());
  }
}
BENCHMARK(BM_TubePeriod)->Args({1, 4})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_HigherMap(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(4);
  PQCoordinates pq;
  pq.kappa = 3;
  for (int i = 0; i < n; ++i) pq.p.push_back(rng.positive_rational(9));
  for (int i = 0; i < n; ++i) pq.q.push_back(rng.positive_rational(9));
  for (auto _ : state) {
    PQCoordinates x = pq;
    for (int it = 0; it < 5; ++it) x = higher_map(x);
    benchmark::DoNotOptimize(x.p.front());
  }
}
BENCHMARK(BM_HigherMap)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
