#include <benchmark/benchmark.h>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/helly.hpp"
#include "hyperchrom/instances.hpp"
#include "hyperchrom/report.hpp"
#include "hyperchrom/symmetry.hpp"

namespace {

hyperchrom::Hypergraph random_instance(std::uint64_t seed) {
  hyperchrom::GeneratorConfig cfg;
  cfg.n = 12;
  cfg.m = 10;
  cfg.size_min = 2;
  cfg.size_max = 4;
  cfg.seed = seed;
  return hyperchrom::random_linear(cfg);
}

void BM_ChromaticIndexFano(benchmark::State& state) {
  const auto h = hyperchrom::fano();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperchrom::chromatic_index_exact(h));
  }
}
BENCHMARK(BM_ChromaticIndexFano);

void BM_ChromaticIndexRandom(benchmark::State& state) {
  const auto h = random_instance(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperchrom::chromatic_index_exact(h));
  }
}
BENCHMARK(BM_ChromaticIndexRandom)->Arg(1)->Arg(2)->Arg(3);

void BM_AutomorphismsFano(benchmark::State& state) {
  const auto h = hyperchrom::fano();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperchrom::automorphisms(h));
  }
}
BENCHMARK(BM_AutomorphismsFano);

void BM_AutomorphismsFlower(benchmark::State& state) {
  const auto h = hyperchrom::flower(3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperchrom::automorphisms(h));
  }
}
BENCHMARK(BM_AutomorphismsFlower);

void BM_HellyFanoLines(benchmark::State& state) {
  const auto h = hyperchrom::fano();
  const auto& sets = h.edges();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperchrom::helly_check(sets));
  }
}
BENCHMARK(BM_HellyFanoLines);

void BM_FullReportFano(benchmark::State& state) {
  const auto h = hyperchrom::fano();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperchrom::analyze(h));
  }
}
BENCHMARK(BM_FullReportFano);

}  // namespace

BENCHMARK_MAIN();
