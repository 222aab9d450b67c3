#pragma once

#include <cstdint>
#include <vector>

#include "quonhom/ensembles.hpp"

namespace quonhom {

struct OracleGridConfig {
  std::vector<int> mode_counts{2, 3, 4};
  std::vector<double> q_values{-1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0};
  int instances = 200;
  std::uint64_t seed = 0;
};

struct OracleGridReport {
  int instances;
  double max_abs_error;    // |closed-form c12 - word-engine c12|
  double max_norm_error;   // | <Psi|Psi> - 1 |
  double max_count_error;  // | <N_j> - 1 |
  bool passed;             // max_abs_error < threshold
  static constexpr double kThreshold = 1e-10;
};

// Random (Phi, phases) instances, each evaluated at every q value by both the
// closed form and the word engine. Mode counts cycle through the configured
// list; anything above 4 modes is refused to keep the grid cheap.
OracleGridReport run_oracle_grid(const OracleGridConfig& config);

struct GramCheckReport {
  double min_eigenvalue;      // over interior q values, words of length <= 3
  double max_null_norm;       // symmetric/antisymmetric pair norms at q = -+1
  double max_identity_error;  // |  ||w -+ swap(w)||^2 - 2 (1 -+ q) |
  bool passed;
  static constexpr double kNullTolerance = 1e-12;
};

// Spectral checks of the deformed Gram form on two modes: strict positivity
// away from |q| = 1 and the predicted null pairs exactly at q = -+1.
GramCheckReport run_gram_checks();

}  // namespace quonhom
