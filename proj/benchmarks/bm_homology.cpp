#include <benchmark/benchmark.h>

#include <sstream>

#include "mpres/filtration.hpp"
#include "mpres/homology.hpp"

namespace {

// Triangulated k x k grid of squares with simplices entering along a staircase.
mpres::MultifilteredComplex grid_complex(int k) {
  std::ostringstream s;
  s << "dim 2\n";
  auto id = [k](int i, int j) { return i * (k + 1) + j; };
  auto at = [](int i, int j) { return "(" + std::to_string(i) + " " + std::to_string(j) + ")"; };
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) s << "simplex " << id(i, j) << " @ " << at(i, j) << "\n";
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      if (i < k) s << "simplex " << id(i, j) << " " << id(i + 1, j) << " @ " << at(i + 1, j) << "\n";
      if (j < k) s << "simplex " << id(i, j) << " " << id(i, j + 1) << " @ " << at(i, j + 1) << "\n";
      if (i < k && j < k) {
        s << "simplex " << id(i, j) << " " << id(i + 1, j + 1) << " @ " << at(i + 1, j + 1) << "\n";
        s << "simplex " << id(i, j) << " " << id(i + 1, j) << " " << id(i + 1, j + 1) << " @ "
          << at(i + 1, j + 1) << "\n";
        s << "simplex " << id(i, j) << " " << id(i, j + 1) << " " << id(i + 1, j + 1) << " @ "
          << at(i + 1, j + 1) << "\n";
      }
    }
  return mpres::parse_filtration(s.str());
}

void BM_BuildModuleH0(benchmark::State& state) {
  const auto X = grid_complex(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(mpres::build_persistence_module(X, 0, mpres::Field::prime(2)));
}
BENCHMARK(BM_BuildModuleH0)->DenseRange(2, 6, 2);

void BM_BuildModuleH1(benchmark::State& state) {
  const auto X = grid_complex(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(mpres::build_persistence_module(X, 1, mpres::Field::prime(2)));
}
BENCHMARK(BM_BuildModuleH1)->DenseRange(2, 6, 2);

}  // namespace
