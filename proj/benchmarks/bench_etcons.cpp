#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "etcons/graph.hpp"
#include "etcons/simulator.hpp"

namespace {

using namespace etcons;

std::vector<std::vector<double>> ring_with_chords(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(0.5, 4.0);
  std::bernoulli_distribution chord(0.1);
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    a[i][j] = a[j][i] = w(rng);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j)
      if (a[i][j] == 0.0 && chord(rng)) a[i][j] = a[j][i] = w(rng);
  return a;
}

SimConfig network_config(LawKind law, std::size_t n) {
  SimConfig c{
      .graph = build_graph(ring_with_chords(n, 11)),
      .x0 = random_initial_states(n, 3, -10.0, 10.0),
      .law = law,
      .params = TriggerParams::uniform(n, AgentParams{}),
      .t_final = 2.0,
  };
  c.seed = 3;
  return c;
}

void BM_JacobiEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LaplacianMatrix l = laplacian(build_graph(ring_with_chords(n, 5)));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigenvalues(l.matrix()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiEigenvalues)->RangeMultiplier(2)->Range(8, 64)->Arg(100)->Complexity();

void BM_SpectralSummary(benchmark::State& state) {
  const LaplacianMatrix l = laplacian(build_graph(ring_with_chords(4, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_summary(l));
}
BENCHMARK(BM_SpectralSummary);

template <LawKind Law>
void BM_Run(benchmark::State& state) {
  const SimConfig cfg = network_config(Law, static_cast<std::size_t>(state.range(0)));
  std::size_t events = 0;
  for (auto _ : state) {
    const SimResult r = run(cfg);
    events = r.summary.total_events;
    benchmark::DoNotOptimize(r.samples.data());
  }
  state.counters["events"] = static_cast<double>(events);
}
BENCHMARK_TEMPLATE(BM_Run, LawKind::StaticContinuous)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Run, LawKind::DynamicContinuous)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Run, LawKind::StaticBroadcast)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Run, LawKind::DynamicBroadcast)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
