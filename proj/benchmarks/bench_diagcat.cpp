#include <benchmark/benchmark.h>

#include "diagcat/catalog.hpp"
#include "diagcat/partial_map.hpp"
#include "diagcat/partition.hpp"
#include "diagcat/verify.hpp"

using namespace diagcat;

namespace {
  // Composition of all pairs in P(n, n).
  void bm_partition_compose(benchmark::State& state) {
    auto        n = static_cast<std::size_t>(state.range(0));
    auto const  h = enumerate_homset(DiagramKind::P, n, n);
    std::size_t i = 0;
    for (auto _ : state) {
      auto const& a = h[i % h.size()];
      auto const& b = h[(i * 7 + 3) % h.size()];
      benchmark::DoNotOptimize(compose(a, b));
      ++i;
    }
  }
  BENCHMARK(bm_partition_compose)->DenseRange(2, 5);

  void bm_map_compose(benchmark::State& state) {
    auto        n = static_cast<std::size_t>(state.range(0));
    auto const  h = enumerate_homset(MapKind::PT, n, n);
    std::size_t i = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          compose(h[i % h.size()], h[(i * 7 + 3) % h.size()]));
      ++i;
    }
  }
  BENCHMARK(bm_map_compose)->DenseRange(2, 4);

  void bm_enumerate_partitions(benchmark::State& state) {
    auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_homset(DiagramKind::P, m, m));
    }
  }
  BENCHMARK(bm_enumerate_partitions)->DenseRange(1, 4);

  void bm_enumerate_tl(benchmark::State& state) {
    auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_homset(DiagramKind::TL, m, m));
    }
  }
  BENCHMARK(bm_enumerate_tl)->DenseRange(2, 8, 2);

  void bm_surjectivity(benchmark::State& state) {
    auto const& p = presentation("P-tensor");
    auto        n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_surjectivity(p, n, n, 16));
    }
  }
  BENCHMARK(bm_surjectivity)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
}  // namespace

BENCHMARK_MAIN();
