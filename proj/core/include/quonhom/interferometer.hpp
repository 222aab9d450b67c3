#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "quonhom/word_algebra.hpp"

namespace quonhom {

// Two-particle spectral amplitude Phi(k1, k2) on an M x M frequency grid,
// row-major, normalized so that sum |Phi|^2 = 1 within kNormTolerance.
class SpectralAmplitude {
 public:
  SpectralAmplitude(int mode_count, std::vector<std::complex<double>> entries);

  // rescales the entries to unit norm
  static SpectralAmplitude normalized(int mode_count,
                                      std::vector<std::complex<double>> entries);

  // product amplitude Phi(k1, k2) = f1(k1) f2(k2), rescaled to unit norm
  static SpectralAmplitude product(const std::vector<std::complex<double>>& f1,
                                   const std::vector<std::complex<double>>& f2);

  int mode_count() const { return mode_count_; }
  std::complex<double> operator()(int k1, int k2) const {
    return entries_[static_cast<std::size_t>(k1) * mode_count_ + k2];
  }
  const std::vector<std::complex<double>>& entries() const { return entries_; }

  static constexpr double kNormTolerance = 1e-12;

 private:
  int mode_count_;
  std::vector<std::complex<double>> entries_;
};

// Relative phase phi_k accumulated by port 2 at frequency k.
struct PhaseProfile {
  std::vector<double> phases;

  static PhaseProfile zero(int mode_count);
  // phi_k = omega_k * tau for a pure propagation delay tau
  static PhaseProfile from_delay(const std::vector<double>& omega, double tau);
};

struct ModeFrequencies {
  std::vector<double> omega;
};

struct CoincidenceResult {
  double w;    // exchange overlap in [-1, 1]
  double c12;  // coincidence probability (1 - q w) / 2
  double q;
  double i1;   // mean count at detector 1 (identically 1)
  double i2;   // mean count at detector 2 (identically 1)
};

// Exchange overlap
//   w = sum_{k1,k2} conj(Phi(k1,k2)) Phi(k2,k1) exp(i(phi_k1 - phi_k2)).
// The sum is real by the k1 <-> k2 symmetry; its imaginary part must stay
// below kRealnessTolerance and the real part is clamped into [-1, 1] only
// when the excess is below kClampTolerance. Larger violations indicate a
// defect and raise internal_error.
double compute_w(const SpectralAmplitude& amp, const PhaseProfile& phases);

// Closed-form coincidence statistics for the deformed exchange algebra.
CoincidenceResult coincidence(const SpectralAmplitude& amp,
                              const PhaseProfile& phases, QuonParameter q);

// Output state of the balanced beam splitter applied to
//   sum Phi(k1,k2) a1^dag(k1) a2^dag(k2) |vac>
// under a1^dag(k) = (b1^dag(k) + b2^dag(k))/sqrt(2) and
// a2^dag(k) = e^{i phi_k} (b1^dag(k) - b2^dag(k))/sqrt(2), keeping the
// operator order of the input word.
WordState beam_splitter_transform(const SpectralAmplitude& amp,
                                  const PhaseProfile& phases);

struct BruteforceCoincidence {
  double c12;
  double imag_residual;  // diagnostic: imaginary part of <Psi|N1 N2|Psi>
};

// Coincidence via the word engine: Re <Psi| N1 N2 |Psi> on the beam splitter
// output, no closed form involved. Exponentially safer than it sounds: the
// two-quantum sector holds at most 4 M^2 words. Rejects mode counts above
// kBruteforceModeLimit.
BruteforceCoincidence coincidence_bruteforce(const SpectralAmplitude& amp,
                                             const PhaseProfile& phases,
                                             QuonParameter q);

struct MeanCounts {
  double i1;
  double i2;
};

// Re <Psi| N_j |Psi> for both detectors, evaluated by the word engine.
MeanCounts mean_counts(const SpectralAmplitude& amp, const PhaseProfile& phases,
                       QuonParameter q);

// Overlap for a product amplitude Phi = f1 x f2:
//   w = |sum_k conj(f1(k)) f2(k) e^{i phi_k}|^2, always in [0, 1].
// Both factors must be normalized within SpectralAmplitude::kNormTolerance.
double separable_w(const std::vector<std::complex<double>>& f1,
                   const std::vector<std::complex<double>>& f2,
                   const PhaseProfile& phases);

struct VisibilityResult {
  double vmax;  // |q| (w_max - w_min) / 2
  PhaseProfile phases_at_max;
  PhaseProfile phases_at_min;
  double w_max;
  double w_min;
};

// Extremizes w over the phase profile by multi-start coordinate ascent. Each
// coordinate update is exact (the objective is A cos phi_k + B sin phi_k in
// one phase), a start stops when a full sweep improves w by less than
// kSweepTolerance or after budget sweeps. Start 0 is the zero profile, the
// remaining starts draw uniform phases from RngStream::for_sample(seed, s).
VisibilityResult visibility(const SpectralAmplitude& amp, QuonParameter q,
                            int budget, int starts = 8,
                            std::uint64_t seed = 0x9d2c5680u);

enum class WitnessVerdict { Entangled, Inconclusive, Degenerate };

const char* to_string(WitnessVerdict verdict);

// Entanglement witness from a measured coincidence rate: reconstructs
// w = (1 - 2 c12) / q and flags Entangled when w < 0, which no separable
// input can reach. q = 0 carries no statistics information (Degenerate).
WitnessVerdict witness(double c12, QuonParameter q);

struct Interval {
  double lo;
  double hi;
};

struct BoundsEnvelope {
  Interval all;        // c12 range over all states: endpoints (1 -+ q)/2
  Interval separable;  // c12 range over product states: between (1 - q)/2 and 1/2
};

BoundsEnvelope bounds_envelope(QuonParameter q);

// Coincidence probability for a finite detection window T at the boson point:
//   C12(T) = Re <Psi| A1(T) A2(T) |Psi>,
//   A_j(T) = sum_{k,k'} g(omega_k - omega_k', T) b_j^dag(k) b_j(k'),
//   g(delta, T) = (e^{i delta T} - 1) / (i delta T), g(0, T) = 1.
// Converges to the closed form at rate O(1 / (T min-gap)).
double finite_time_coincidence(const SpectralAmplitude& amp,
                               const PhaseProfile& phases,
                               const ModeFrequencies& freqs, double T);

inline constexpr double kRealnessTolerance = 1e-12;
inline constexpr double kClampTolerance = 1e-9;
inline constexpr double kSweepTolerance = 1e-12;
inline constexpr int kBruteforceModeLimit = 16;

}  // namespace quonhom
