#include <benchmark/benchmark.h>

#include "quonhom/ensembles.hpp"
#include "quonhom/interferometer.hpp"
#include "quonhom/scenarios.hpp"

namespace {

using namespace quonhom;

void BM_SampleAmplitude(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  RngStream rng(42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_random_amplitude(m, rng));
  }
}
BENCHMARK(BM_SampleAmplitude)->RangeMultiplier(2)->Range(2, 16);

void BM_AverageW(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const EnsembleSpec spec{m, 10000, 7};
  const auto phases = PhaseProfile::zero(m);
  const QuonParameter q(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_w_mc(spec, phases, q));
  }
  state.SetItemsProcessed(state.iterations() * spec.samples);
}
BENCHMARK(BM_AverageW)->RangeMultiplier(2)->Range(2, 8)->Unit(benchmark::kMillisecond);

void BM_Visibility(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto spec = TwinBeamSpec::gaussian(m, m - 1, m / 8.0, 0.0, 1.0, {});
  const auto amp = twin_beam_amplitude(spec);
  const QuonParameter q(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(visibility(amp, q, 200));
  }
}
BENCHMARK(BM_Visibility)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FiniteTime(benchmark::State& state) {
  const auto spec = TwinBeamSpec::gaussian(4, 3, 1.0, 0.0, 1.0, {});
  const auto amp = twin_beam_amplitude(spec);
  const PhaseProfile phases{{0.0, 0.3, 0.6, 0.9}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        finite_time_coincidence(amp, phases, spec.omega, 1000.0));
  }
}
BENCHMARK(BM_FiniteTime);

}  // namespace
