#include "quonhom/validation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "quonhom/rng.hpp"

namespace quonhom {

OracleGridReport run_oracle_grid(const OracleGridConfig& config) {
  if (config.instances < 1) {
    throw validation_error("oracle grid needs at least one instance");
  }
  if (config.mode_counts.empty()) {
    throw validation_error("oracle grid needs at least one mode count");
  }
  if (config.q_values.empty()) {
    throw validation_error("oracle grid needs at least one q value");
  }
  for (int m : config.mode_counts) {
    if (m < 1) {
      throw validation_error("oracle grid mode counts must be positive");
    }
    if (m > 4) {
      throw resource_error("oracle grid supports at most 4 modes per instance");
    }
  }
  std::vector<QuonParameter> qs;
  qs.reserve(config.q_values.size());
  for (double q : config.q_values) {
    qs.emplace_back(q);
  }
  OracleGridReport report{config.instances, 0.0, 0.0, 0.0, false};
  for (int i = 0; i < config.instances; ++i) {
    const int m = config.mode_counts[static_cast<std::size_t>(i) %
                                     config.mode_counts.size()];
    RngStream rng = RngStream::for_sample(config.seed, static_cast<std::uint64_t>(i));
    const SpectralAmplitude amp = sample_random_amplitude(m, rng);
    PhaseProfile phases = PhaseProfile::zero(m);
    for (double& p : phases.phases) {
      p = 2.0 * 3.14159265358979323846 * rng.uniform01();
    }
    for (const QuonParameter& q : qs) {
      const CoincidenceResult closed = coincidence(amp, phases, q);
      const BruteforceCoincidence brute = coincidence_bruteforce(amp, phases, q);
      report.max_abs_error =
          std::max(report.max_abs_error, std::abs(closed.c12 - brute.c12));
      const WordState psi = beam_splitter_transform(amp, phases);
      report.max_norm_error =
          std::max(report.max_norm_error,
                   std::abs(state_inner(psi, psi, q).real() - 1.0));
      const MeanCounts counts = mean_counts(amp, phases, q);
      report.max_count_error = std::max({report.max_count_error,
                                         std::abs(counts.i1 - 1.0),
                                         std::abs(counts.i2 - 1.0)});
    }
  }
  report.passed = report.max_abs_error < OracleGridReport::kThreshold;
  return report;
}

GramCheckReport run_gram_checks() {
  const auto words = enumerate_words(2, 3);
  const std::vector<double> interior{-0.9, -0.5, 0.0, 0.5, 0.9};
  GramCheckReport report{2.0, 0.0, 0.0, false};
  for (double qv : interior) {
    const QuonParameter q(qv);
    const auto n = static_cast<Eigen::Index>(words.size());
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        gram(a, b) = gram_entry(words[static_cast<std::size_t>(a)],
                                words[static_cast<std::size_t>(b)], q)
                         .real();
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram,
                                                          Eigen::EigenvaluesOnly);
    report.min_eigenvalue =
        std::min(report.min_eigenvalue, solver.eigenvalues().minCoeff());
  }
  // Pair words w = xy against swap(w) = yx for distinct labels x, y. The
  // combination w - swap(w) must be null at q = 1 and w + swap(w) at q = -1,
  // with ||w -+ swap(w)||^2 = 2 (1 -+ q) everywhere.
  const std::vector<double> all_q{-1.0, -0.9, -0.5, 0.0, 0.5, 0.9, 1.0};
  for (int port1 = 1; port1 <= 2; ++port1) {
    for (int mode1 = 0; mode1 < 2; ++mode1) {
      for (int port2 = 1; port2 <= 2; ++port2) {
        for (int mode2 = 0; mode2 < 2; ++mode2) {
          const OperatorLabel x{port1, mode1};
          const OperatorLabel y{port2, mode2};
          if (x == y) {
            continue;
          }
          const CreationWord w{x, y};
          const CreationWord swapped{y, x};
          for (double qv : all_q) {
            const QuonParameter q(qv);
            const double diag = gram_entry(w, w, q).real() +
                                gram_entry(swapped, swapped, q).real();
            const double cross = 2.0 * gram_entry(w, swapped, q).real();
            const double minus_norm = diag - cross;
            const double plus_norm = diag + cross;
            report.max_identity_error =
                std::max({report.max_identity_error,
                          std::abs(minus_norm - 2.0 * (1.0 - qv)),
                          std::abs(plus_norm - 2.0 * (1.0 + qv))});
            if (qv == 1.0) {
              report.max_null_norm =
                  std::max(report.max_null_norm, std::abs(minus_norm));
            }
            if (qv == -1.0) {
              report.max_null_norm =
                  std::max(report.max_null_norm, std::abs(plus_norm));
            }
          }
        }
      }
    }
  }
  report.passed = report.min_eigenvalue > 0.0 &&
                  report.max_null_norm < GramCheckReport::kNullTolerance &&
                  report.max_identity_error < GramCheckReport::kNullTolerance;
  return report;
}

}  // namespace quonhom
