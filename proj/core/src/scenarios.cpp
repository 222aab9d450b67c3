#include "quonhom/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quonhom {

namespace {

void validate_spec(const TwinBeamSpec& spec) {
  const int m = spec.mode_count;
  if (m < 1) {
    throw validation_error("twin-beam spec needs a positive mode count");
  }
  if (static_cast<int>(spec.envelope.size()) != m) {
    throw validation_error("twin-beam envelope size does not match the grid");
  }
  if (static_cast<int>(spec.omega.omega.size()) != m) {
    throw validation_error("twin-beam frequency grid size does not match");
  }
  double norm2 = 0.0;
  for (int k = 0; k < m; ++k) {
    const auto& f = spec.envelope[static_cast<std::size_t>(k)];
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw validation_error("twin-beam envelope contains a non-finite entry");
    }
    norm2 += std::norm(f);
    const int partner = spec.pump_index - k;
    if (f != 0.0 && (partner < 0 || partner >= m)) {
      throw validation_error("envelope support at k = " + std::to_string(k) +
                             " has no partner mode K - k inside the grid");
    }
  }
  if (std::abs(norm2 - 1.0) > SpectralAmplitude::kNormTolerance) {
    throw validation_error("twin-beam envelope is not normalized");
  }
  for (double w : spec.omega.omega) {
    if (!std::isfinite(w)) {
      throw validation_error("twin-beam frequencies must be finite");
    }
  }
  for (double tau : spec.tau_grid) {
    if (!std::isfinite(tau)) {
      throw validation_error("twin-beam delay grid must be finite");
    }
  }
}

}  // namespace

TwinBeamSpec TwinBeamSpec::gaussian(int mode_count, int pump_index, double sigma,
                                    double omega0, double delta_omega,
                                    std::vector<double> tau_grid) {
  if (mode_count < 1) {
    throw validation_error("twin-beam spec needs a positive mode count");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw validation_error("twin-beam envelope width must be positive");
  }
  if (!std::isfinite(omega0) || !std::isfinite(delta_omega)) {
    throw validation_error("twin-beam comb parameters must be finite");
  }
  const int lo = std::max(0, pump_index - (mode_count - 1));
  const int hi = std::min(mode_count - 1, pump_index);
  if (lo > hi) {
    throw validation_error("pump index leaves no mode pairs inside the grid");
  }
  const double center = 0.5 * pump_index;
  std::vector<std::complex<double>> f(static_cast<std::size_t>(mode_count), 0.0);
  double norm2 = 0.0;
  for (int k = lo; k <= hi; ++k) {
    const double d = (static_cast<double>(k) - center) / sigma;
    const double v = std::exp(-0.5 * d * d);
    f[static_cast<std::size_t>(k)] = v;
    norm2 += v * v;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& v : f) {
    v *= scale;
  }
  TwinBeamSpec spec;
  spec.mode_count = mode_count;
  spec.pump_index = pump_index;
  spec.envelope = std::move(f);
  spec.omega.omega.resize(static_cast<std::size_t>(mode_count));
  for (int k = 0; k < mode_count; ++k) {
    spec.omega.omega[static_cast<std::size_t>(k)] = omega0 + k * delta_omega;
  }
  spec.tau_grid = std::move(tau_grid);
  validate_spec(spec);
  return spec;
}

SpectralAmplitude twin_beam_amplitude(const TwinBeamSpec& spec) {
  validate_spec(spec);
  const int m = spec.mode_count;
  std::vector<std::complex<double>> entries(
      static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
  for (int k = 0; k < m; ++k) {
    const auto& f = spec.envelope[static_cast<std::size_t>(k)];
    if (f == 0.0) {
      continue;
    }
    const int partner = spec.pump_index - k;
    entries[static_cast<std::size_t>(k) * m + partner] = f;
  }
  return SpectralAmplitude(m, std::move(entries));
}

std::vector<CurvePoint> dip_curve(const TwinBeamSpec& spec, QuonParameter q) {
  const SpectralAmplitude amp = twin_beam_amplitude(spec);
  std::vector<CurvePoint> curve;
  curve.reserve(spec.tau_grid.size());
  for (double tau : spec.tau_grid) {
    const PhaseProfile phases = PhaseProfile::from_delay(spec.omega.omega, tau);
    const double w = compute_w(amp, phases);
    curve.push_back({tau, w, 0.5 * (1.0 - q.value() * w)});
  }
  return curve;
}

std::vector<EnvelopeRow> envelope_diagram(const std::vector<double>& q_grid,
                                          int mode_count) {
  if (mode_count < 1) {
    throw validation_error("envelope diagram needs a positive mode count");
  }
  std::vector<EnvelopeRow> rows;
  rows.reserve(q_grid.size());
  for (double q : q_grid) {
    const QuonParameter qp(q);
    const BoundsEnvelope env = bounds_envelope(qp);
    rows.push_back({q, env.all.lo, env.all.hi, env.separable.lo, env.separable.hi,
                    average_coincidence(mode_count, qp)});
  }
  return rows;
}

}  // namespace quonhom
