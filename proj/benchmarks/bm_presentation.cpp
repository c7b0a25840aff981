#include <benchmark/benchmark.h>

#include "mpres/filtration.hpp"
#include "mpres/homology.hpp"
#include "mpres/presentation.hpp"

namespace {

// One vertex whose entry set is every monomial of degree k; H_0 is the ideal (x, y)^k.
mpres::PersistenceModule power_ideal(int k) {
  std::string text = "dim 2\nsimplex 0 @ ";
  for (int i = 0; i <= k; ++i) {
    if (i) text += " | ";
    text += "(" + std::to_string(k - i) + " " + std::to_string(i) + ")";
  }
  return mpres::build_persistence_module(mpres::parse_filtration(text + "\n"), 0,
                                         mpres::Field::prime(2));
}

void BM_MinimalPresentation(benchmark::State& state) {
  const auto M = power_ideal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mpres::minimal_presentation(M));
}
BENCHMARK(BM_MinimalPresentation)->DenseRange(2, 8, 2);

void BM_Resolve(benchmark::State& state) {
  const auto M = power_ideal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mpres::resolve(M, 3));
}
BENCHMARK(BM_Resolve)->DenseRange(2, 8, 2);

}  // namespace
