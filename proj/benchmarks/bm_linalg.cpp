#include <benchmark/benchmark.h>

#include <random>

#include "mpres/linalg.hpp"

namespace {

mpres::DenseMatrix random_matrix(mpres::Field f, std::size_t n, std::uint32_t p) {
  std::mt19937 rng(1);
  mpres::DenseMatrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % p));
  return m;
}

void BM_RrefFp(benchmark::State& state) {
  const auto m = random_matrix(mpres::Field::prime(101), state.range(0), 101);
  for (auto _ : state) benchmark::DoNotOptimize(mpres::rref(m));
}
BENCHMARK(BM_RrefFp)->RangeMultiplier(2)->Range(8, 128);

void BM_RrefQ(benchmark::State& state) {
  const auto m = random_matrix(mpres::Field::rationals(), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mpres::rref(m));
}
BENCHMARK(BM_RrefQ)->RangeMultiplier(2)->Range(8, 32);

}  // namespace
