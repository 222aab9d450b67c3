#pragma once

#include <cstdint>

#include "quonhom/interferometer.hpp"
#include "quonhom/rng.hpp"

namespace quonhom {

struct EnsembleSpec {
  int mode_count;
  long long samples;
  std::uint64_t seed;
};

struct AverageReport {
  double mean_w;
  double stderr_w;   // standard error of mean_w; 0 for a single sample
  double mean_c12;   // (1 - q mean_w) / 2
  double exact_w;    // ensemble mean of w in closed form: 1 / M
  double exact_c12;  // ensemble mean of c12 in closed form: 1/2 - q / (2M)
};

// Draws Phi uniformly from the unit sphere of the M^2-dimensional amplitude
// space: i.i.d. standard complex Gaussian entries, rescaled to unit norm.
SpectralAmplitude sample_random_amplitude(int mode_count, RngStream& rng);

// Monte Carlo mean of the exchange overlap over sphere-uniform amplitudes at
// a fixed phase profile. Sample i draws from RngStream::for_sample(seed, i),
// so the report is bit-identical for a given spec no matter how many threads
// evaluate it; the reduction uses pairwise summation.
AverageReport average_w_mc(const EnsembleSpec& spec, const PhaseProfile& phases,
                           QuonParameter q);

// Ensemble-averaged coincidence in closed form: 1/2 - q / (2M).
double average_coincidence(int mode_count, QuonParameter q);

}  // namespace quonhom
