#include "quonhom/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace quonhom {

namespace {

// deterministic regardless of chunking: plain recursive halving
double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 8) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      total += data[i];
    }
    return total;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

// index-parallel evaluation into caller-owned slots; the work function must
// touch only its own index
template <typename Fn>
void parallel_for(long long n, const Fn& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const long long min_chunk = 4096;
  if (hw <= 1 || n < 2 * min_chunk) {
    for (long long i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  const long long workers =
      std::min<long long>(hw, (n + min_chunk - 1) / min_chunk);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const long long stride = (n + workers - 1) / workers;
  for (long long wkr = 0; wkr < workers; ++wkr) {
    const long long begin = wkr * stride;
    const long long end = std::min(n, begin + stride);
    pool.emplace_back([begin, end, &fn] {
      for (long long i = begin; i < end; ++i) {
        fn(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

}  // namespace

SpectralAmplitude sample_random_amplitude(int mode_count, RngStream& rng) {
  if (mode_count < 1) {
    throw validation_error("amplitude mode count must be positive");
  }
  const std::size_t dim =
      static_cast<std::size_t>(mode_count) * static_cast<std::size_t>(mode_count);
  std::vector<std::complex<double>> entries(dim);
  while (true) {
    double norm2 = 0.0;
    for (auto& z : entries) {
      z = {rng.normal(), rng.normal()};
      norm2 += std::norm(z);
    }
    if (norm2 > 0.0) {
      break;
    }
    // all 2 M^2 Gaussians vanished; astronomically unlikely, draw again
  }
  return SpectralAmplitude::normalized(mode_count, std::move(entries));
}

AverageReport average_w_mc(const EnsembleSpec& spec, const PhaseProfile& phases,
                           QuonParameter q) {
  if (spec.mode_count < 1) {
    throw validation_error("ensemble mode count must be positive");
  }
  if (spec.samples < 1) {
    throw validation_error("ensemble needs at least one sample");
  }
  if (static_cast<int>(phases.phases.size()) != spec.mode_count) {
    throw validation_error("phase profile size does not match the ensemble grid");
  }
  const auto n = static_cast<std::size_t>(spec.samples);
  std::vector<double> w(n);
  parallel_for(spec.samples, [&](long long i) {
    RngStream rng = RngStream::for_sample(spec.seed, static_cast<std::uint64_t>(i));
    const SpectralAmplitude amp = sample_random_amplitude(spec.mode_count, rng);
    w[static_cast<std::size_t>(i)] = compute_w(amp, phases);
  });
  const double mean = pairwise_sum(w.data(), n) / static_cast<double>(n);
  double stderr_mean = 0.0;
  if (n > 1) {
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - mean;
      sq[i] = d * d;
    }
    const double var =
        pairwise_sum(sq.data(), n) / static_cast<double>(n - 1);
    stderr_mean = std::sqrt(var / static_cast<double>(n));
  }
  AverageReport report;
  report.mean_w = mean;
  report.stderr_w = stderr_mean;
  report.mean_c12 = 0.5 * (1.0 - q.value() * mean);
  report.exact_w = 1.0 / static_cast<double>(spec.mode_count);
  report.exact_c12 = average_coincidence(spec.mode_count, q);
  return report;
}

double average_coincidence(int mode_count, QuonParameter q) {
  if (mode_count < 1) {
    throw validation_error("mode count must be positive");
  }
  return 0.5 - q.value() / (2.0 * static_cast<double>(mode_count));
}

}  // namespace quonhom
