#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "quonhom/ensembles.hpp"
#include "quonhom/interferometer.hpp"
#include "quonhom/rng.hpp"
#include "quonhom/word_algebra.hpp"

namespace {

using namespace quonhom;

void BM_GramEntry(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  // worst case for the matcher: a single repeated label
  const CreationWord w(n, OperatorLabel{1, 0});
  const QuonParameter q(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_entry(w, w, q));
  }
}
BENCHMARK(BM_GramEntry)->DenseRange(2, 6);

void BM_ReduceOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CreationWord w(n, OperatorLabel{1, 0});
  const MixedWord mixed = bra_ket_word(w, w);
  const QuonParameter q(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_word_oracle(mixed, q));
  }
}
BENCHMARK(BM_ReduceOracle)->DenseRange(2, 5);

SpectralAmplitude random_amplitude(int m) {
  RngStream rng(2718281828u);
  return sample_random_amplitude(m, rng);
}

void BM_BeamSplitterNorm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto amp = random_amplitude(m);
  const auto psi = beam_splitter_transform(amp, PhaseProfile::zero(m));
  const QuonParameter q(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(state_inner(psi, psi, q));
  }
}
BENCHMARK(BM_BeamSplitterNorm)->RangeMultiplier(2)->Range(2, 16);

void BM_BruteforceCoincidence(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto amp = random_amplitude(m);
  const auto phases = PhaseProfile::zero(m);
  const QuonParameter q(-0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coincidence_bruteforce(amp, phases, q));
  }
}
BENCHMARK(BM_BruteforceCoincidence)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

BENCHMARK_MAIN();
