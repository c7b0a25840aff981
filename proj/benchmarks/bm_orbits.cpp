#include <benchmark/benchmark.h>

#include "mpres/multiset.hpp"
#include "mpres/orbits.hpp"

namespace {

void BM_OrbitCount(benchmark::State& state) {
  const auto xi0 = mpres::parse_multiset("{(0 0):2}");
  const auto xi1 = mpres::parse_multiset("{(3 0), (2 1), (1 2), (0 3)}");
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mpres::orbit_count(q, xi0, xi1));
}
BENCHMARK(BM_OrbitCount)->Arg(2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CrossRatioOrbits(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mpres::cross_ratio_orbits(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_CrossRatioOrbits)->Arg(5)->Arg(7)->Arg(11);

}  // namespace
