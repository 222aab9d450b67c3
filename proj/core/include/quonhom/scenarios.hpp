#pragma once

#include <complex>
#include <vector>

#include "quonhom/ensembles.hpp"
#include "quonhom/interferometer.hpp"

namespace quonhom {

// Twin-beam source: Phi(k, K - k) = f(k) on an M-mode comb, all other
// entries zero. K is the pump index; every k in the support of f must keep
// K - k inside [0, M).
struct TwinBeamSpec {
  int mode_count;
  int pump_index;
  std::vector<std::complex<double>> envelope;  // f(k), unit norm
  ModeFrequencies omega;
  std::vector<double> tau_grid;

  // Gaussian envelope f(k) proportional to exp(-(k - K/2)^2 / (2 sigma^2)),
  // clipped to the k range allowed by the pump index and normalized, on the
  // comb omega_k = omega0 + k delta_omega.
  static TwinBeamSpec gaussian(int mode_count, int pump_index, double sigma,
                               double omega0, double delta_omega,
                               std::vector<double> tau_grid);
};

struct CurvePoint {
  double tau;
  double w;
  double c12;
};

SpectralAmplitude twin_beam_amplitude(const TwinBeamSpec& spec);

// Coincidence versus delay: phases phi_k = omega_k tau per grid point.
std::vector<CurvePoint> dip_curve(const TwinBeamSpec& spec, QuonParameter q);

struct EnvelopeRow {
  double q;
  double all_lo;
  double all_hi;
  double sep_lo;
  double sep_hi;
  double mean_c12;  // sphere-uniform ensemble mean 1/2 - q / (2M)
};

// Attainable c12 regions and the ensemble mean as a function of q.
std::vector<EnvelopeRow> envelope_diagram(const std::vector<double>& q_grid,
                                          int mode_count);

}  // namespace quonhom
