#include "quonhom/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quonhom/rng.hpp"

namespace quonhom {

namespace {

double norm_squared(const std::vector<std::complex<double>>& v) {
  double total = 0.0;
  for (const auto& z : v) {
    total += std::norm(z);
  }
  return total;
}

void check_finite(const std::vector<std::complex<double>>& v, const char* what) {
  for (const auto& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw validation_error(std::string(what) + " contains a non-finite entry");
    }
  }
}

void check_phases(const PhaseProfile& phases, int mode_count) {
  if (static_cast<int>(phases.phases.size()) != mode_count) {
    throw validation_error("phase profile size does not match the mode grid");
  }
  for (double p : phases.phases) {
    if (!std::isfinite(p)) {
      throw validation_error("phase profile contains a non-finite entry");
    }
  }
}

double clamp_overlap(double w, const char* what) {
  if (w > 1.0) {
    if (w - 1.0 >= kClampTolerance) {
      throw internal_error(std::string(what) + " exceeded 1 beyond tolerance");
    }
    return 1.0;
  }
  if (w < -1.0) {
    if (-1.0 - w >= kClampTolerance) {
      throw internal_error(std::string(what) + " fell below -1 beyond tolerance");
    }
    return -1.0;
  }
  return w;
}

}  // namespace

SpectralAmplitude::SpectralAmplitude(int mode_count,
                                     std::vector<std::complex<double>> entries)
    : mode_count_(mode_count), entries_(std::move(entries)) {
  if (mode_count < 1) {
    throw validation_error("amplitude mode count must be positive");
  }
  const auto expected =
      static_cast<std::size_t>(mode_count) * static_cast<std::size_t>(mode_count);
  if (entries_.size() != expected) {
    throw validation_error("amplitude must hold mode_count^2 entries");
  }
  check_finite(entries_, "spectral amplitude");
  if (std::abs(norm_squared(entries_) - 1.0) > kNormTolerance) {
    throw validation_error("spectral amplitude is not normalized");
  }
}

SpectralAmplitude SpectralAmplitude::normalized(
    int mode_count, std::vector<std::complex<double>> entries) {
  check_finite(entries, "spectral amplitude");
  const double n2 = norm_squared(entries);
  if (n2 <= 0.0) {
    throw validation_error("cannot normalize a zero amplitude");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& z : entries) {
    z *= scale;
  }
  return SpectralAmplitude(mode_count, std::move(entries));
}

SpectralAmplitude SpectralAmplitude::product(
    const std::vector<std::complex<double>>& f1,
    const std::vector<std::complex<double>>& f2) {
  if (f1.empty() || f1.size() != f2.size()) {
    throw validation_error("product amplitude factors must share a non-empty grid");
  }
  const int m = static_cast<int>(f1.size());
  std::vector<std::complex<double>> entries;
  entries.reserve(f1.size() * f2.size());
  for (int k1 = 0; k1 < m; ++k1) {
    for (int k2 = 0; k2 < m; ++k2) {
      entries.push_back(f1[k1] * f2[k2]);
    }
  }
  return normalized(m, std::move(entries));
}

PhaseProfile PhaseProfile::zero(int mode_count) {
  if (mode_count < 1) {
    throw validation_error("phase profile mode count must be positive");
  }
  return PhaseProfile{std::vector<double>(mode_count, 0.0)};
}

PhaseProfile PhaseProfile::from_delay(const std::vector<double>& omega, double tau) {
  if (!std::isfinite(tau)) {
    throw validation_error("delay must be finite");
  }
  PhaseProfile out;
  out.phases.reserve(omega.size());
  for (double w : omega) {
    if (!std::isfinite(w)) {
      throw validation_error("mode frequencies must be finite");
    }
    out.phases.push_back(w * tau);
  }
  return out;
}

double compute_w(const SpectralAmplitude& amp, const PhaseProfile& phases) {
  const int m = amp.mode_count();
  check_phases(phases, m);
  std::complex<double> sum = 0.0;
  for (int k1 = 0; k1 < m; ++k1) {
    for (int k2 = 0; k2 < m; ++k2) {
      sum += std::conj(amp(k1, k2)) * amp(k2, k1) *
             std::polar(1.0, phases.phases[k1] - phases.phases[k2]);
    }
  }
  if (std::abs(sum.imag()) >= kRealnessTolerance) {
    throw internal_error("exchange overlap acquired an imaginary part");
  }
  return clamp_overlap(sum.real(), "exchange overlap");
}

CoincidenceResult coincidence(const SpectralAmplitude& amp,
                              const PhaseProfile& phases, QuonParameter q) {
  const double w = compute_w(amp, phases);
  return {w, 0.5 * (1.0 - q.value() * w), q.value(), 1.0, 1.0};
}

WordState beam_splitter_transform(const SpectralAmplitude& amp,
                                  const PhaseProfile& phases) {
  const int m = amp.mode_count();
  check_phases(phases, m);
  WordState out(m);
  for (int k1 = 0; k1 < m; ++k1) {
    for (int k2 = 0; k2 < m; ++k2) {
      const std::complex<double> phi = amp(k1, k2);
      if (phi == 0.0) {
        continue;
      }
      const std::complex<double> base =
          0.5 * phi * std::polar(1.0, phases.phases[k2]);
      out.add({{1, k1}, {1, k2}}, base);
      out.add({{1, k1}, {2, k2}}, -base);
      out.add({{2, k1}, {1, k2}}, base);
      out.add({{2, k1}, {2, k2}}, -base);
    }
  }
  return out;
}

namespace {

void check_bruteforce_size(int mode_count) {
  if (mode_count > kBruteforceModeLimit) {
    throw resource_error("word-basis evaluation supports at most " +
                         std::to_string(kBruteforceModeLimit) + " modes");
  }
}

}  // namespace

BruteforceCoincidence coincidence_bruteforce(const SpectralAmplitude& amp,
                                             const PhaseProfile& phases,
                                             QuonParameter q) {
  check_bruteforce_size(amp.mode_count());
  const WordState psi = beam_splitter_transform(amp, phases);
  const WordState n2 = number_apply(psi, 2);
  const WordState n1n2 = number_apply(n2, 1);
  const std::complex<double> value = state_inner(psi, n1n2, q);
  return {value.real(), value.imag()};
}

MeanCounts mean_counts(const SpectralAmplitude& amp, const PhaseProfile& phases,
                       QuonParameter q) {
  check_bruteforce_size(amp.mode_count());
  const WordState psi = beam_splitter_transform(amp, phases);
  const double i1 = state_inner(psi, number_apply(psi, 1), q).real();
  const double i2 = state_inner(psi, number_apply(psi, 2), q).real();
  return {i1, i2};
}

double separable_w(const std::vector<std::complex<double>>& f1,
                   const std::vector<std::complex<double>>& f2,
                   const PhaseProfile& phases) {
  if (f1.empty() || f1.size() != f2.size()) {
    throw validation_error("separable factors must share a non-empty grid");
  }
  check_finite(f1, "factor f1");
  check_finite(f2, "factor f2");
  if (std::abs(norm_squared(f1) - 1.0) > SpectralAmplitude::kNormTolerance ||
      std::abs(norm_squared(f2) - 1.0) > SpectralAmplitude::kNormTolerance) {
    throw validation_error("separable factors must be normalized");
  }
  check_phases(phases, static_cast<int>(f1.size()));
  std::complex<double> z = 0.0;
  for (std::size_t k = 0; k < f1.size(); ++k) {
    z += std::conj(f1[k]) * f2[k] * std::polar(1.0, phases.phases[k]);
  }
  const double w = std::norm(z);
  if (w > 1.0) {
    if (w - 1.0 >= kClampTolerance) {
      throw internal_error("separable overlap exceeded 1 beyond tolerance");
    }
    return 1.0;
  }
  return w;
}

namespace {

// w as a function of z_k = e^{i phi_k} through the Hermitian form
// sum R(k1,k2) z_k1 conj(z_k2) with R(k1,k2) = conj(Phi(k1,k2)) Phi(k2,k1).
struct OverlapForm {
  int m;
  std::vector<std::complex<double>> r;

  explicit OverlapForm(const SpectralAmplitude& amp) : m(amp.mode_count()) {
    r.resize(static_cast<std::size_t>(m) * m);
    for (int k1 = 0; k1 < m; ++k1) {
      for (int k2 = 0; k2 < m; ++k2) {
        r[static_cast<std::size_t>(k1) * m + k2] =
            std::conj(amp(k1, k2)) * amp(k2, k1);
      }
    }
  }

  std::complex<double> at(int k1, int k2) const {
    return r[static_cast<std::size_t>(k1) * m + k2];
  }

  double value(const std::vector<std::complex<double>>& z) const {
    std::complex<double> sum = 0.0;
    for (int k1 = 0; k1 < m; ++k1) {
      for (int k2 = 0; k2 < m; ++k2) {
        sum += at(k1, k2) * z[k1] * std::conj(z[k2]);
      }
    }
    return sum.real();
  }
};

// One full coordinate sweep; each phase update is the exact extremum of
// A cos(phi) + B sin(phi), the only part of w that depends on phi_k.
double sweep(const OverlapForm& form, std::vector<double>& phases,
             std::vector<std::complex<double>>& z, bool maximize) {
  for (int k = 0; k < form.m; ++k) {
    std::complex<double> u = 0.0;
    for (int b = 0; b < form.m; ++b) {
      if (b != k) {
        u += form.at(k, b) * std::conj(z[b]);
      }
    }
    const double a = 2.0 * u.real();
    const double b = -2.0 * u.imag();
    if (a == 0.0 && b == 0.0) {
      continue;
    }
    double phi = std::atan2(b, a);
    if (!maximize) {
      phi = std::atan2(-b, -a);
    }
    phases[k] = phi;
    z[k] = std::polar(1.0, phi);
  }
  return form.value(z);
}

struct ExtremumResult {
  double w;
  std::vector<double> phases;
};

ExtremumResult extremize(const OverlapForm& form, int budget, int starts,
                         std::uint64_t seed, bool maximize) {
  ExtremumResult best{maximize ? -2.0 : 2.0, {}};
  for (int s = 0; s < starts; ++s) {
    std::vector<double> phases(form.m, 0.0);
    if (s > 0) {
      RngStream rng = RngStream::for_sample(seed, static_cast<std::uint64_t>(s));
      for (double& p : phases) {
        p = 2.0 * 3.14159265358979323846 * rng.uniform01();
      }
    }
    std::vector<std::complex<double>> z(form.m);
    for (int k = 0; k < form.m; ++k) {
      z[k] = std::polar(1.0, phases[k]);
    }
    double current = form.value(z);
    for (int it = 0; it < budget; ++it) {
      const double next = sweep(form, phases, z, maximize);
      const double gain = maximize ? next - current : current - next;
      current = next;
      if (gain < kSweepTolerance) {
        break;
      }
    }
    if ((maximize && current > best.w) || (!maximize && current < best.w)) {
      best = {current, phases};
    }
  }
  return best;
}

}  // namespace

VisibilityResult visibility(const SpectralAmplitude& amp, QuonParameter q,
                            int budget, int starts, std::uint64_t seed) {
  if (budget < 1) {
    throw validation_error("optimizer budget must be at least 1 sweep");
  }
  if (starts < 1) {
    throw validation_error("optimizer needs at least 1 start");
  }
  const OverlapForm form(amp);
  ExtremumResult hi = extremize(form, budget, starts, seed, true);
  ExtremumResult lo = extremize(form, budget, starts, seed, false);
  PhaseProfile at_max{std::move(hi.phases)};
  PhaseProfile at_min{std::move(lo.phases)};
  const double w_max = compute_w(amp, at_max);
  const double w_min = compute_w(amp, at_min);
  const double vmax = std::abs(q.value()) * 0.5 * (w_max - w_min);
  return {vmax, std::move(at_max), std::move(at_min), w_max, w_min};
}

const char* to_string(WitnessVerdict verdict) {
  switch (verdict) {
    case WitnessVerdict::Entangled:
      return "Entangled";
    case WitnessVerdict::Inconclusive:
      return "Inconclusive";
    case WitnessVerdict::Degenerate:
      return "Degenerate";
  }
  throw internal_error("unknown witness verdict");
}

WitnessVerdict witness(double c12, QuonParameter q) {
  if (!(c12 >= 0.0 && c12 <= 1.0)) {
    throw validation_error("coincidence rate must lie in [0, 1]");
  }
  if (q.value() == 0.0) {
    return WitnessVerdict::Degenerate;
  }
  const double reconstructed = (1.0 - 2.0 * c12) / q.value();
  return reconstructed < 0.0 ? WitnessVerdict::Entangled
                             : WitnessVerdict::Inconclusive;
}

BoundsEnvelope bounds_envelope(QuonParameter qp) {
  const double q = qp.value();
  const double lo = 0.5 * (1.0 - q);
  const double hi = 0.5 * (1.0 + q);
  BoundsEnvelope env;
  env.all = {std::min(lo, hi), std::max(lo, hi)};
  env.separable = {std::min(lo, 0.5), std::max(lo, 0.5)};
  return env;
}

namespace {

// g(delta, T) = (e^{i delta T} - 1) / (i delta T); series below |x| = 1e-4
// to avoid the subtractive cancellation in e^{ix} - 1.
std::complex<double> window_weight(double delta, double t) {
  if (delta == 0.0) {
    return 1.0;
  }
  const double x = delta * t;
  if (std::abs(x) < 1e-4) {
    return {1.0 - x * x / 6.0, x / 2.0 - x * x * x / 24.0};
  }
  return {std::sin(x) / x, (1.0 - std::cos(x)) / x};
}

// sum_{k1,k2} weights(k1,k2) b_port^dag(k1) b_port(k2) |state>
WordState apply_window_bilinear(const WordState& state, int port,
                                const std::vector<std::complex<double>>& weights,
                                QuonParameter q) {
  const int m = state.mode_count();
  WordState out(m);
  for (const auto& [word, coeff] : state.terms()) {
    double exchange = 1.0;
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (word[p].port == port) {
        const int k2 = word[p].mode;
        CreationWord shorter;
        shorter.reserve(word.size() - 1);
        shorter.insert(shorter.end(), word.begin(), word.begin() + p);
        shorter.insert(shorter.end(), word.begin() + p + 1, word.end());
        for (int k1 = 0; k1 < m; ++k1) {
          const std::complex<double> weight =
              weights[static_cast<std::size_t>(k1) * m + k2];
          if (weight == 0.0) {
            continue;
          }
          CreationWord extended;
          extended.reserve(word.size());
          extended.push_back({port, k1});
          extended.insert(extended.end(), shorter.begin(), shorter.end());
          out.add(extended, coeff * exchange * weight);
        }
      }
      exchange *= q.value();
    }
  }
  return out;
}

}  // namespace

double finite_time_coincidence(const SpectralAmplitude& amp,
                               const PhaseProfile& phases,
                               const ModeFrequencies& freqs, double t) {
  const int m = amp.mode_count();
  check_bruteforce_size(m);
  check_phases(phases, m);
  if (static_cast<int>(freqs.omega.size()) != m) {
    throw validation_error("mode frequency grid does not match the amplitude");
  }
  for (double w : freqs.omega) {
    if (!std::isfinite(w)) {
      throw validation_error("mode frequencies must be finite");
    }
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw validation_error("detection window must be positive and finite");
  }
  std::vector<std::complex<double>> weights(static_cast<std::size_t>(m) * m);
  for (int k1 = 0; k1 < m; ++k1) {
    for (int k2 = 0; k2 < m; ++k2) {
      weights[static_cast<std::size_t>(k1) * m + k2] =
          window_weight(freqs.omega[k1] - freqs.omega[k2], t);
    }
  }
  const QuonParameter boson(1.0);
  const WordState psi = beam_splitter_transform(amp, phases);
  const WordState a2 = apply_window_bilinear(psi, 2, weights, boson);
  const WordState a1a2 = apply_window_bilinear(a2, 1, weights, boson);
  const std::complex<double> value = state_inner(psi, a1a2, boson);
  if (std::abs(value.imag()) > kClampTolerance) {
    throw internal_error("finite-window coincidence acquired an imaginary part");
  }
  return value.real();
}

}  // namespace quonhom
